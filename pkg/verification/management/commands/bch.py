"""
Print the Baker-Campbell-Hausdorff series log(e^y e^x) in canonical form.
Usage: python manage.py bch --order N [--form log|direct|linear] [--json]
"""
from verification.bch import bch_direct, bch_linear_closed, bch_log
from verification.management.base import VerificationCommand
from verification.reporting import series_json
from verification.serializers import BchOptionsSerializer

FORMS = {
    'log': bch_log,
    'direct': bch_direct,
    'linear': bch_linear_closed,
}


class Command(VerificationCommand):
    help = 'Print BCH(y, x) through a truncation order (linear: its y-linear part)'

    def add_arguments(self, parser):
        parser.add_argument('--order', type=int, required=True, help='Truncation word length')
        parser.add_argument('--form', choices=sorted(FORMS), default='log', help='Which formula to evaluate')
        parser.add_argument('--json', action='store_true', help='Emit {word, coeff} records')

    def handle(self, *args, **options):
        opts = self.validated(BchOptionsSerializer, {'order': options['order'], 'form': options['form']})
        series = self.execute_kernel(FORMS[opts['form']], opts['order'])
        if options['json']:
            self.stdout.write(series_json(series))
        else:
            self.stdout.write(series.text())
