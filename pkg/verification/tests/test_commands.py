import json
import subprocess
import sys
from io import StringIO

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from verification.bch import bch_log
from verification.checks import check_names
from verification.dgl import model_ls
from verification.gauge import gauge


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out, no_color=True)
    return out.getvalue()


class BernoulliCommandTests(SimpleTestCase):
    def test_text_table(self):
        lines = run('bernoulli', '--max', '6').splitlines()
        self.assertEqual(lines, [
            'B_0 = 1', 'B_1 = -1/2', 'B_2 = 1/6', 'B_3 = 0', 'B_4 = -1/30', 'B_5 = 0', 'B_6 = 1/42',
        ])

    def test_json_table(self):
        records = json.loads(run('bernoulli', '--max', '4', '--json'))
        self.assertEqual([record['value'] for record in records], ['1', '-1/2', '1/6', '0', '-1/30'])
        self.assertEqual(records[2]['n'], 2)

    def test_negative_max(self):
        with self.assertRaises(CommandError) as caught:
            run('bernoulli', '--max', '-1')
        self.assertEqual(caught.exception.returncode, 2)


class BchCommandTests(SimpleTestCase):
    def test_text(self):
        self.assertEqual(run('bch', '--order', '3').strip(), bch_log(3).text())

    def test_json_linear(self):
        payload = json.loads(run('bch', '--order', '2', '--form', 'linear', '--json'))
        self.assertEqual(payload['alphabet'], ['y', 'x'])
        self.assertEqual(payload['terms'], [
            {'word': ['y'], 'coeff': '1'},
            {'word': ['y', 'x'], 'coeff': '1/2'},
            {'word': ['x', 'y'], 'coeff': '-1/2'},
        ])

    def test_direct_form_matches(self):
        self.assertEqual(run('bch', '--order', '4', '--form', 'direct'), run('bch', '--order', '4'))


class GaugeCommandTests(SimpleTestCase):
    def test_z_on_b(self):
        ls = model_ls(4)
        output = run('gauge', '--model', 'ls', '--x', 'z', '--a', 'b', '--order', '4').splitlines()
        self.assertEqual(output[0], gauge(ls, ls.generator('z'), ls.generator('b')).text())
        self.assertEqual(output[0], '1·a')
        self.assertEqual(output[1], 'Maurer-Cartan: yes')

    def test_wrong_degree_exits_with_usage_code(self):
        with self.assertRaises(CommandError) as caught:
            run('gauge', '--model', 'ls', '--x', 'a', '--a', 'b', '--order', '4')
        self.assertEqual(caught.exception.returncode, 2)

    def test_unknown_generator(self):
        with self.assertRaises(CommandError) as caught:
            run('gauge', '--model', 'interval', '--x', 'z', '--a', 'b', '--order', '4')
        self.assertEqual(caught.exception.returncode, 2)


class VerifyCommandTests(SimpleTestCase):
    def test_pass(self):
        output = run('verify', 'ls-d2', '--order', '4')
        self.assertTrue(output.startswith('PASS ls-d2 (order=4)'))

    def test_failure_exits_one_after_reporting(self):
        out = StringIO()
        with self.assertRaises(CommandError) as caught:
            call_command('verify', 'gen-euler', '--max-n', '40', '--variant', 'as-printed', stdout=out, no_color=True)
        self.assertEqual(caught.exception.returncode, 1)
        self.assertIn('FAIL gen-euler', out.getvalue())
        self.assertIn('first failure at (n,m)=(4,0): expected 0, got 1/72', out.getvalue())

    def test_json_record(self):
        record = json.loads(run('verify', 'gen-euler', '--max-n', '12', '--json'))
        self.assertEqual(record['check'], 'gen-euler')
        self.assertEqual(record['status'], 'pass')
        self.assertEqual(record['parameters'], {'min_n': 4, 'max_n': 12, 'variant': 'both'})
        self.assertIsNone(record['first_failure'])
        self.assertIn('as-printed first fails at (n,m)=(4,0)', record['note'])

    def test_json_is_stable_apart_from_timing(self):
        first = json.loads(run('verify', 'eq4', '--max-weight', '6', '--json'))
        second = json.loads(run('verify', 'eq4', '--max-weight', '6', '--json'))
        first.pop('elapsed_ms')
        second.pop('elapsed_ms')
        self.assertEqual(first, second)

    def test_unknown_check(self):
        with self.assertRaises(CommandError) as caught:
            run('verify', 'not-a-check')
        self.assertEqual(caught.exception.returncode, 2)

    def test_invalid_order(self):
        with self.assertRaises(CommandError) as caught:
            run('verify', 'ls-d2', '--order', '0')
        self.assertEqual(caught.exception.returncode, 2)


class RunAllCommandTests(SimpleTestCase):
    def test_everything_passes_at_low_order(self):
        output = run('run-all', '--order', '3')
        names = check_names()
        self.assertIn(f"{len(names)}/{len(names)} checks passed", output)
        self.assertNotIn('FAIL', output)

    def test_json_stream_has_one_record_per_check(self):
        lines = run('run-all', '--order', '3', '--json').splitlines()
        self.assertEqual([json.loads(line)['check'] for line in lines], check_names())


def manage(*args):
    return subprocess.run(
        [sys.executable, 'manage.py', *args],
        cwd=settings.BASE_DIR, capture_output=True, text=True,
    )


class ExitStatusTests(SimpleTestCase):
    def test_unknown_command_exits_two_with_usage(self):
        result = manage('frobnicate')
        self.assertEqual(result.returncode, 2)
        self.assertIn("Unknown command: 'frobnicate'", result.stderr)
        self.assertIn('run-all', result.stderr)

    def test_failed_check_exits_one(self):
        result = manage('verify', 'gen-euler', '--max-n', '4', '--variant', 'as-printed')
        self.assertEqual(result.returncode, 1)
        self.assertIn('first failure at (n,m)=(4,0)', result.stdout)

    def test_unknown_flag_exits_two(self):
        self.assertEqual(manage('verify', 'ls-d2', '--frobnicate').returncode, 2)

    def test_passing_check_exits_zero(self):
        self.assertEqual(manage('verify', 'ls-d2', '--order', '3').returncode, 0)
