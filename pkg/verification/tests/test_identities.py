from fractions import Fraction

from django.test import SimpleTestCase

from verification.exceptions import DomainError
from verification.identities import (
    GenEulerVariant, c_coeff, eq4_residual, euler_residual, gen_euler_residual, gen_euler_sums,
    recursion_residual,
)


class CoefficientTests(SimpleTestCase):
    def test_values(self):
        self.assertEqual(c_coeff(0, 0), 1)
        self.assertEqual(c_coeff(1, 0), Fraction(-1, 2))
        self.assertEqual(c_coeff(0, 1), Fraction(1, 2))
        self.assertEqual(c_coeff(1, 1), Fraction(-1, 6))
        self.assertEqual(c_coeff(2, 0), Fraction(1, 12))
        self.assertEqual(c_coeff(2, 1), 0)

    def test_negative_index(self):
        with self.assertRaises(DomainError):
            c_coeff(-1, 2)


class Eq4Tests(SimpleTestCase):
    def test_lowest_weights(self):
        self.assertEqual(eq4_residual(0, 0), 0)
        self.assertEqual(eq4_residual(1, 0), 0)
        self.assertEqual(eq4_residual(0, 1), 0)

    def test_vanishes_up_to_weight_14(self):
        for weight in range(15):
            for p in range(weight + 1):
                self.assertEqual(eq4_residual(p, weight - p), 0, (p, weight - p))

    def test_perturbed_table_is_detected(self):
        def table(p, q):
            return c_coeff(p, q) + (Fraction(1, 5) if (p, q) == (1, 0) else 0)

        self.assertNotEqual(eq4_residual(0, 0, table), 0)


class RecursionAndEulerTests(SimpleTestCase):
    def test_recursion_through_60(self):
        for n in range(1, 61):
            self.assertEqual(recursion_residual(n), 0, n)

    def test_recursion_domain(self):
        with self.assertRaises(DomainError):
            recursion_residual(0)

    def test_euler_through_40(self):
        for n in range(4, 41, 2):
            self.assertEqual(euler_residual(n), 0, n)

    def test_euler_domain(self):
        for n in (2, 5, 0):
            with self.assertRaises(DomainError):
                euler_residual(n)


class GeneralizedEulerTests(SimpleTestCase):
    def test_sum_corrected_holds_from_four(self):
        for n in range(4, 31, 2):
            for m in range(n):
                self.assertEqual(gen_euler_residual(n, m), 0, (n, m))

    def test_as_printed_first_failures(self):
        self.assertEqual(gen_euler_residual(4, 0, GenEulerVariant.AS_PRINTED), Fraction(1, 72))
        self.assertEqual(gen_euler_residual(4, 1, 'as-printed'), Fraction(1, 36))

    def test_variants_agree_where_second_sum_is_empty(self):
        for n in range(4, 41, 2):
            for m in (n - 2, n - 1):
                for variant in GenEulerVariant:
                    self.assertEqual(gen_euler_residual(n, m, variant), 0, (n, m, variant))

    def test_as_printed_fails_at_every_n(self):
        for n in range(4, 41, 2):
            self.assertNotEqual(gen_euler_residual(n, 0, GenEulerVariant.AS_PRINTED), 0, n)

    def test_n_equals_two_fails_for_both_variants(self):
        for variant in GenEulerVariant:
            self.assertEqual(gen_euler_residual(2, 0, variant), Fraction(-1, 4))
            self.assertEqual(gen_euler_residual(2, 1, variant), Fraction(-1, 4))

    def test_right_hand_side_symmetry(self):
        for n in range(4, 21, 2):
            for m in range(n):
                self.assertEqual(sum(gen_euler_sums(n, m)), sum(gen_euler_sums(n, n - m - 1)), (n, m))

    def test_domain(self):
        with self.assertRaises(DomainError):
            gen_euler_residual(5, 0)
        with self.assertRaises(DomainError):
            gen_euler_residual(4, 4)
        with self.assertRaises(ValueError):
            gen_euler_residual(4, 0, 'sideways')
