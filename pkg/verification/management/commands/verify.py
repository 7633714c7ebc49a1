"""
Run one named verification check.
Usage: python manage.py verify CHECK [--order N] [--max-n N] [--min-n N]
       [--max-weight W] [--variant as-printed|sum-corrected] [--samples K] [--json]
"""
from verification.checks import CheckRunner, check_names
from verification.management.base import VerificationCommand
from verification.serializers import VerifyOptionsSerializer


class Command(VerificationCommand):
    help = 'Run one named check; exit 1 if it fails'

    def add_arguments(self, parser):
        parser.add_argument('check', help=f"One of: {', '.join(check_names())}")
        parser.add_argument('--order', type=int, help='Truncation word length')
        parser.add_argument('--max-n', type=int, help='Upper index for Bernoulli identity checks')
        parser.add_argument('--min-n', type=int, help='Lower n for gen-euler')
        parser.add_argument('--max-weight', type=int, help='Largest p+q for eq4')
        parser.add_argument('--variant', help='gen-euler variant: as-printed, sum-corrected or both')
        parser.add_argument('--samples', type=int, help='Random inputs for randomized checks')
        parser.add_argument('--json', action='store_true', help='Emit one JSON record')

    def handle(self, *args, **options):
        opts = self.validated(VerifyOptionsSerializer, {
            key: options[key]
            for key in ('check', 'order', 'max_n', 'min_n', 'max_weight', 'variant', 'samples')
        })
        runner = CheckRunner(
            order=opts.get('order'),
            max_n=opts.get('max_n'),
            min_n=opts.get('min_n'),
            max_weight=opts.get('max_weight'),
            variant=opts.get('variant'),
            samples=opts.get('samples'),
        )
        report = self.execute_kernel(runner.run, opts['check'])
        self.emit_reports([report], options['json'])
