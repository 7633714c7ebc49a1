"""
Text and JSON rendering of check reports, series and Bernoulli tables.

JSON goes through DRF serializers and JSONRenderer, one record per line.
"""
from typing import Iterable, List

from rest_framework.renderers import JSONRenderer

from .checks import CheckReport
from .exact import BernoulliTable
from .freeseries import Series
from .serializers import BernoulliEntrySerializer, CheckReportSerializer, SeriesTermSerializer

_renderer = JSONRenderer()


def to_json(data) -> str:
    return _renderer.render(data).decode('utf-8')


def _format_parameters(parameters: dict) -> str:
    return ', '.join(f"{key}={value}" for key, value in parameters.items())


def report_text(report: CheckReport) -> str:
    line = f"{report.status.upper()} {report.check} ({_format_parameters(report.parameters)}) {report.elapsed_ms:.1f} ms"
    failure = report.first_failure
    if failure is not None:
        line += f"\n  first failure at {failure.location}: expected {failure.expected}, got {failure.actual}"
    if report.note:
        line += f"\n  note: {report.note}"
    return line


def report_json(report: CheckReport) -> str:
    return to_json(CheckReportSerializer(report).data)


def series_json(s: Series) -> str:
    return to_json({
        'alphabet': s.alphabet.names,
        'order': s.order,
        'terms': SeriesTermSerializer(s.records(), many=True).data,
    })


def bernoulli_lines(table: BernoulliTable, as_json: bool) -> List[str]:
    if as_json:
        entries = [{'n': n, 'value': value} for n, value in enumerate(table)]
        return [to_json(BernoulliEntrySerializer(entries, many=True).data)]
    return [f"B_{n} = {value}" for n, value in enumerate(table)]


def summary_line(reports: Iterable[CheckReport]) -> str:
    reports = list(reports)
    failed = [report.check for report in reports if not report.passed]
    line = f"{len(reports) - len(failed)}/{len(reports)} checks passed"
    if failed:
        line += f"; failed: {', '.join(failed)}"
    return line
