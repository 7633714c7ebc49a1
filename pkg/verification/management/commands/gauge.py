"""
Apply the gauge action of one generator to another.
Usage: python manage.py gauge --model {ls|interval|probe} --x GEN --a GEN --order N [--json]
"""
from django.conf import settings

from verification.checks import build_model
from verification.gauge import gauge, is_mc
from verification.management.base import VerificationCommand
from verification.reporting import series_json
from verification.serializers import GaugeOptionsSerializer


class Command(VerificationCommand):
    help = 'Print x * a = e^{ad_x}(a) - f_x(dx) and whether the result is Maurer-Cartan'

    def add_arguments(self, parser):
        parser.add_argument('--model', required=True, help='ls, interval or probe')
        parser.add_argument('--x', required=True, help='Degree 0 generator acting')
        parser.add_argument('--a', required=True, help='Degree -1 generator acted on')
        parser.add_argument('--order', type=int, default=None, help='Truncation word length')
        parser.add_argument('--json', action='store_true', help='Emit {word, coeff} records')

    def handle(self, *args, **options):
        opts = self.validated(GaugeOptionsSerializer, {
            'model': options['model'],
            'x': options['x'],
            'a': options['a'],
            'order': options['order'] or settings.LSVERIFY['DEFAULT_ORDER'],
        })
        model = self.execute_kernel(build_model, opts['model'], opts['order'])
        result = self.execute_kernel(gauge, model, model.generator(opts['x']), model.generator(opts['a']))
        if options['json']:
            self.stdout.write(series_json(result))
            return
        self.stdout.write(result.text())
        if is_mc(model, result).flat:
            self.stdout.write(self.style.SUCCESS('Maurer-Cartan: yes'))
        else:
            self.stdout.write(self.style.WARNING('Maurer-Cartan: no'))
