import random
from fractions import Fraction

from django.test import SimpleTestCase

from verification.bch import BCH_ALPHABET
from verification.dgl import LS_ALPHABET, chain_map_check, model_ls, model_probe
from verification.exceptions import ConstantTermError, DegreeError, NotMaurerCartan
from verification.freeseries import Series, bracket, random_series
from verification.gauge import (
    PathOrientation, gauge, gauge_ode, is_mc, morphism_from_gauge, op_exp_ad, op_f, op_f_inv,
)


class MaurerCartanTests(SimpleTestCase):
    def setUp(self):
        self.ls = model_ls(5)
        self.a = self.ls.generator('a')
        self.b = self.ls.generator('b')

    def test_flat_elements(self):
        self.assertTrue(is_mc(self.ls, self.a))
        self.assertTrue(is_mc(self.ls, Series.zero(LS_ALPHABET, 5)).flat)

    def test_sum_of_flat_elements_is_not_flat(self):
        result = is_mc(self.ls, self.a + self.b)
        self.assertFalse(result.flat)
        self.assertEqual(result.residual, self.a * self.b + self.b * self.a)

    def test_wrong_degree(self):
        with self.assertRaises(DegreeError):
            is_mc(self.ls, self.ls.generator('z'))


class OperatorSeriesTests(SimpleTestCase):
    def test_exp_ad_of_zero(self):
        y = Series.letter(BCH_ALPHABET, 'y', 5)
        self.assertEqual(op_exp_ad(Series.zero(BCH_ALPHABET, 5), y), y)

    def test_f_low_order(self):
        x = Series.letter(BCH_ALPHABET, 'x', 2)
        y = Series.letter(BCH_ALPHABET, 'y', 2)
        self.assertEqual(op_f(x, y), y + bracket(x, y).scale(Fraction(1, 2)))

    def test_f_inverse(self):
        rng = random.Random(23)
        x0 = Series.letter(BCH_ALPHABET, 'x', 10)
        for _ in range(4):
            x = x0 + random_series(rng, BCH_ALPHABET, 0, 10)
            y = random_series(rng, BCH_ALPHABET, -1, 10)
            self.assertEqual(op_f_inv(x, op_f(x, y)), y)
            self.assertEqual(op_f(x, op_f_inv(x, y)), y)
        probe = model_probe(6)
        for _ in range(4):
            x = random_series(rng, probe.alphabet, 0, 6)
            y = random_series(rng, probe.alphabet, -1, 6)
            self.assertEqual(op_f_inv(x, op_f(x, y)), y)

    def test_degree_zero_required(self):
        y = Series.letter(BCH_ALPHABET, 'y', 3)
        with self.assertRaises(DegreeError):
            op_exp_ad(y, y)

    def test_scalar_part_of_x_acts_as_zero(self):
        y = Series.letter(BCH_ALPHABET, 'y', 3)
        self.assertEqual(op_f(Series.one(BCH_ALPHABET, 3), y), y)
        self.assertEqual(op_exp_ad(Series.one(BCH_ALPHABET, 3).scale(5), y), y)


class GaugeActionTests(SimpleTestCase):
    def test_zero_acts_trivially(self):
        ls = model_ls(5)
        a = ls.generator('a')
        self.assertEqual(gauge(ls, Series.zero(LS_ALPHABET, 5), a), a)

    def test_z_moves_b_to_a(self):
        ls = model_ls(6)
        self.assertEqual(gauge(ls, ls.generator('z'), ls.generator('b')), ls.generator('a'))

    def test_cycle_fixes_zero(self):
        probe = model_probe(5)
        moved = gauge(probe, probe.generator('x'), Series.zero(probe.alphabet, 5))
        self.assertTrue(moved.is_zero())

    def test_preserves_flatness(self):
        probe = model_probe(5)
        rng = random.Random(29)
        v = probe.generator('v')
        for _ in range(6):
            x = random_series(rng, probe.alphabet, 0, 5)
            moved = gauge(probe, x, v)
            self.assertTrue(is_mc(probe, moved).flat)
            self.assertTrue(is_mc(probe, gauge(probe, random_series(rng, probe.alphabet, 0, 5), moved)).flat)

    def test_degree_checks(self):
        ls = model_ls(4)
        with self.assertRaises(DegreeError):
            gauge(ls, ls.generator('a'), ls.generator('b'))
        with self.assertRaises(DegreeError):
            gauge(ls, ls.generator('z'), ls.generator('z'))

    def test_scalar_part_of_parameter_is_dropped(self):
        ls = model_ls(6)
        x = ls.generator('z') + Series.one(LS_ALPHABET, 6).scale(3)
        self.assertEqual(gauge(ls, x, ls.generator('b')), ls.generator('a'))
        self.assertEqual(gauge_ode(ls, x, ls.generator('b'), 'flow').evaluate(1), ls.generator('a'))

    def test_difference_lies_over_x_and_its_boundary(self):
        probe = model_probe(6)
        rng = random.Random(41)
        cases = [(probe.generator('x'), probe.generator('v'))]
        for _ in range(8):
            cases.append((
                random_series(rng, probe.alphabet, 0, 6, max_length=2, terms=1),
                random_series(rng, probe.alphabet, -1, 6),
            ))
        for x, a in cases:
            letters = {letter for s in (x, probe.apply(x)) for word in s.words() for letter in word}
            moved = gauge(probe, x, a) - a
            untouched = moved.restrict(lambda word: letters.isdisjoint(word))
            self.assertTrue(untouched.is_zero(), (x.text(), a.text()))
        x, v = cases[0]
        self.assertFalse((gauge(probe, x, v) - v).is_zero())


class GaugePathTests(SimpleTestCase):
    def test_zero_parameter(self):
        ls = model_ls(4)
        a = ls.generator('a')
        path = gauge_ode(ls, Series.zero(LS_ALPHABET, 4), a)
        self.assertEqual(path[0], a)
        self.assertTrue(path[1].is_zero())
        self.assertEqual(path.evaluate(1), a)

    def test_first_coefficient(self):
        ls = model_ls(5)
        z, b = ls.generator('z'), ls.generator('b')
        path = gauge_ode(ls, z, b)
        self.assertEqual(path[1], ls.d('z') - bracket(z, b))
        flow = gauge_ode(ls, z, b, PathOrientation.FLOW)
        self.assertEqual(flow[1], bracket(z, b) - ls.d('z'))

    def test_endpoints(self):
        ls = model_ls(6)
        z, b = ls.generator('z'), ls.generator('b')
        self.assertEqual(gauge_ode(ls, z, b, 'flow').evaluate(1), ls.generator('a'))
        self.assertEqual(gauge_ode(ls, z, b).evaluate(1), gauge(ls, -z, b))
        self.assertEqual(gauge_ode(ls, z, b).evaluate(0), b)

    def test_random_endpoints(self):
        probe = model_probe(5)
        rng = random.Random(31)
        v = probe.generator('v')
        for _ in range(6):
            x = random_series(rng, probe.alphabet, 0, 5)
            self.assertEqual(gauge_ode(probe, x, v, PathOrientation.FLOW).evaluate(1), gauge(probe, x, v))
            self.assertEqual(gauge_ode(probe, x, v).evaluate(1), gauge(probe, -x, v))


class MorphismFromGaugeTests(SimpleTestCase):
    def test_identity_case(self):
        ls = model_ls(5)
        phi = morphism_from_gauge(ls.generator('z'), ls.generator('b'), ls)
        for name in ('a', 'b', 'z'):
            self.assertEqual(phi.image(name), ls.generator(name))
        self.assertTrue(chain_map_check(phi, ls, ls).passed)

    def test_constant_path(self):
        ls = model_ls(5)
        a = ls.generator('a')
        phi = morphism_from_gauge(Series.zero(LS_ALPHABET, 5), a, ls)
        self.assertEqual(phi.image('a'), a)
        self.assertEqual(phi.image('b'), a)
        self.assertTrue(phi.image('z').is_zero())
        self.assertTrue(chain_map_check(phi, ls, ls).passed)

    def test_random_targets(self):
        probe = model_probe(5)
        ls = model_ls(5)
        rng = random.Random(37)
        for _ in range(4):
            w = random_series(rng, probe.alphabet, 0, 5)
            v = gauge(probe, random_series(rng, probe.alphabet, 0, 5), probe.generator('v'))
            phi = morphism_from_gauge(w, v, probe)
            self.assertTrue(chain_map_check(phi, ls, probe).passed)

    def test_not_maurer_cartan(self):
        ls = model_ls(4)
        a, b = ls.generator('a'), ls.generator('b')
        with self.assertRaises(NotMaurerCartan) as caught:
            morphism_from_gauge(ls.generator('z'), a + b, ls)
        self.assertEqual(caught.exception.residual, a * b + b * a)

    def test_constant_image_of_z_is_rejected(self):
        ls = model_ls(4)
        with self.assertRaises(ConstantTermError):
            morphism_from_gauge(Series.one(LS_ALPHABET, 4), ls.generator('a'), ls)
