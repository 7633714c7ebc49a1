"""
Shared plumbing for the verification management commands.

Exit codes: 0 when everything passed, 1 when a check failed, 2 for invalid
options or a kernel error.
"""
from django.core.management.base import BaseCommand, CommandError

from ..exceptions import VerificationError
from ..reporting import report_json, report_text, summary_line

EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class VerificationCommand(BaseCommand):
    requires_system_checks = []

    def validated(self, serializer_class, data):
        """Validate options through a serializer, or exit 2 with its errors."""
        serializer = serializer_class(data=data)
        if not serializer.is_valid():
            problems = '; '.join(
                f"{field}: {' '.join(str(message) for message in messages)}"
                for field, messages in serializer.errors.items()
            )
            raise CommandError(f"invalid options: {problems}", returncode=EXIT_USAGE)
        return serializer.validated_data

    def execute_kernel(self, function, *args, **kwargs):
        try:
            return function(*args, **kwargs)
        except VerificationError as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc

    def emit_reports(self, reports, as_json: bool, summary: bool = False):
        """Write every report, then fail with exit 1 if any check failed."""
        for report in reports:
            if as_json:
                self.stdout.write(report_json(report))
            elif report.passed:
                self.stdout.write(self.style.SUCCESS(report_text(report)))
            else:
                self.stdout.write(self.style.ERROR(report_text(report)))
        if summary and not as_json:
            self.stdout.write(summary_line(reports))
        failed = [report.check for report in reports if not report.passed]
        if failed:
            raise CommandError(f"{len(failed)} check(s) failed: {', '.join(failed)}", returncode=EXIT_CHECK_FAILED)
