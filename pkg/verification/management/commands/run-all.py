"""
Run every check at one truncation order, identity ranges at their acceptance values.
Usage: python manage.py run-all [--order N] [--json]
"""
from verification.checks import CheckRunner
from verification.management.base import VerificationCommand
from verification.serializers import RunAllOptionsSerializer


class Command(VerificationCommand):
    help = 'Run all checks in declaration order; exit 1 if any fails'

    def add_arguments(self, parser):
        parser.add_argument('--order', type=int, help='Truncation word length')
        parser.add_argument('--json', action='store_true', help='Emit one JSON record per check')

    def handle(self, *args, **options):
        opts = self.validated(RunAllOptionsSerializer, {'order': options['order']})
        runner = CheckRunner(order=opts.get('order'))
        reports = self.execute_kernel(runner.run_all)
        self.emit_reports(reports, options['json'], summary=True)
