"""
Print the Bernoulli numbers B_0..B_N (B_1 = -1/2).
Usage: python manage.py bernoulli --max N [--json]
"""
from verification.exact import bernoulli_table
from verification.management.base import VerificationCommand
from verification.reporting import bernoulli_lines
from verification.serializers import BernoulliOptionsSerializer


class Command(VerificationCommand):
    help = 'Print the exact Bernoulli numbers B_0..B_N'

    def add_arguments(self, parser):
        parser.add_argument('--max', type=int, required=True, help='Largest index N')
        parser.add_argument('--json', action='store_true', help='Emit one JSON array instead of text')

    def handle(self, *args, **options):
        opts = self.validated(BernoulliOptionsSerializer, {'max': options['max']})
        table = self.execute_kernel(bernoulli_table, opts['max'])
        for line in bernoulli_lines(table, options['json']):
            self.stdout.write(line)
