import os
import random
from unittest import TestCase

from sympy import Rational, oo

from stacksort_roots.algebra.polynomial import RationalPoly
from stacksort_roots.algebra.sturm import SturmSequence, certify, count_real_roots_detailed, count_real_roots_in, \
    isolate_roots, roots_same_sign, roots_within, strictly_interlaces, sturm_chain
from stacksort_roots.model.exception import DegreeError, NotRealRootedError, NotSquarefreeError, ZeroPolynomialError

SLOW = os.environ.get('STACKSORT_SLOW_TESTS')
TRIALS = 500 if SLOW else 30
MAX_DEGREE = 12 if SLOW else 8


def _random_rational_roots(rnd: random.Random, degree: int):
    roots = set()
    while len(roots) < degree:
        roots.add(Rational(rnd.randint(-40, 40), rnd.randint(1, 9)))
    return sorted(roots)


class TestSturmChain(TestCase):
    def test_chain_of_x2_minus_1(self):
        self.assertEqual(sturm_chain(RationalPoly([-1, 0, 1])),
                         [RationalPoly([-1, 0, 1]), RationalPoly([0, 1]), RationalPoly([1])])

    def test_zero_polynomial(self):
        with self.assertRaises(ZeroPolynomialError):
            SturmSequence(RationalPoly.zero())
        with self.assertRaises(ZeroPolynomialError):
            certify(RationalPoly.zero())

    def test_signs_at_infinity(self):
        seq = SturmSequence(RationalPoly([1, 0, -1]))  # 1 - x^2
        self.assertEqual(seq.sign_at(oo), -1)
        self.assertEqual(seq.sign_at(-oo), -1)
        self.assertEqual(seq.sign_at(Rational(1, 3)), 1)
        self.assertTrue(seq.is_root(Rational(-1)))


class TestRootCounting(TestCase):
    def test_counts(self):
        p = RationalPoly.from_roots([-3, 1, 2])
        self.assertEqual(count_real_roots_in(p), 3)
        self.assertEqual(count_real_roots_in(p, 0, oo), 2)
        self.assertEqual(count_real_roots_in(p, -oo, 0), 1)
        self.assertEqual(count_real_roots_in(RationalPoly([1, 0, 1])), 0)

    def test_half_open_endpoints(self):
        p = RationalPoly.from_roots([0, 1, 2])
        count, perturbed = count_real_roots_detailed(p, 0, 2)
        # 0 is outside (0, 2], 2 is inside
        self.assertEqual(count, 2)
        self.assertEqual(perturbed, [(Rational(0), Rational(1, 2)), (Rational(2), Rational(3))])
        self.assertEqual(count_real_roots_in(p, "1/2", "3/2"), 1)

    def test_moved_endpoints_are_logged(self):
        with self.assertLogs('stacksort_roots.algebra.sturm', level='WARNING') as logs:
            count_real_roots_detailed(RationalPoly.from_roots([0, 1, 2]), 0, 2)
        self.assertEqual(len(logs.records), 2)
        self.assertIn("Left endpoint 0", logs.output[0])
        self.assertIn("Right endpoint 2", logs.output[1])

    def test_repeated_roots_counted_once(self):
        p = RationalPoly.from_roots([1, 1, 1, -2])
        self.assertEqual(count_real_roots_in(p), 2)

    def test_empty_interval(self):
        with self.assertRaises(ValueError):
            count_real_roots_in(RationalPoly([0, 1]), 1, 1)


class TestIsolation(TestCase):
    def test_isolating_intervals(self):
        p = RationalPoly.from_roots([-3, 1, 2])
        intervals = isolate_roots(p)
        self.assertEqual(len(intervals), 3)
        for (lo, hi), root in zip(intervals, [-3, 1, 2]):
            self.assertTrue(lo < root < hi)
            self.assertLess(p(lo) * p(hi), 0)
        for (_, hi), (lo, _) in zip(intervals, intervals[1:]):
            self.assertLessEqual(hi, lo)

    def test_close_roots(self):
        p = RationalPoly.from_roots([Rational(1, 1000), Rational(2, 1000), 5])
        self.assertEqual(len(isolate_roots(p)), 3)

    def test_requires_squarefree(self):
        with self.assertRaises(NotSquarefreeError):
            isolate_roots(RationalPoly.from_roots([1, 1]))
        self.assertEqual(isolate_roots(RationalPoly.constant(4)), [])


class TestCertificates(TestCase):
    def test_real_rooted(self):
        cert = certify(RationalPoly.from_roots([-3, 1, 2]))
        self.assertTrue(cert.is_real_rooted)
        self.assertTrue(cert.is_squarefree)
        self.assertEqual((cert.negative_roots, cert.zero_root_multiplicity, cert.positive_roots), (1, 0, 2))
        self.assertEqual(len(cert.isolating_intervals), 3)
        self.assertFalse(roots_same_sign(cert))

    def test_not_real_rooted(self):
        cert = certify(RationalPoly([1, 0, 1]))
        self.assertFalse(cert.is_real_rooted)
        self.assertEqual(cert.real_root_count, 0)
        with self.assertRaises(NotRealRootedError):
            roots_same_sign(cert)

    def test_multiplicities(self):
        # x^2 (x+1)^3 (x^2+1)
        p = RationalPoly.from_roots([0, 0, -1, -1, -1]) * RationalPoly([1, 0, 1])
        cert = certify(p)
        self.assertEqual(cert.degree, 7)
        self.assertEqual(cert.real_root_count, 5)
        self.assertEqual((cert.negative_roots, cert.zero_root_multiplicity, cert.positive_roots), (3, 2, 0))
        self.assertFalse(cert.is_squarefree)
        self.assertIsNone(cert.isolating_intervals)

    def test_zero_root_is_recorded(self):
        cert = certify(RationalPoly.from_roots([-1, 0, 2]))
        self.assertEqual((cert.negative_roots, cert.zero_root_multiplicity, cert.positive_roots), (1, 1, 1))
        self.assertEqual(cert.perturbed_endpoints, [(Rational(0), Rational(-1, 2))])

    def test_constants(self):
        cert = certify(RationalPoly.constant(2))
        self.assertTrue(cert.is_real_rooted)
        self.assertEqual(cert.degree, 0)

    def test_schema(self):
        cert = certify(RationalPoly.from_roots([-1, -2]))
        self.assertEqual(cert.to_dict(), {"degree": 2, "real_roots": 2, "real_rooted": True, "squarefree": True,
                                          "negative": 2, "zero": 0, "positive": 0})
        self.assertTrue(roots_same_sign(cert))

    def test_random_products_of_linear_factors(self):
        rnd = random.Random(2020)
        for _ in range(TRIALS):
            roots = _random_rational_roots(rnd, rnd.randint(1, MAX_DEGREE))
            p = RationalPoly.from_roots(roots, leading=rnd.choice([-3, 1, 2]))
            cert = certify(p)
            self.assertTrue(cert.is_real_rooted)
            self.assertEqual(cert.negative_roots, sum(1 for r in roots if r < 0))
            self.assertEqual(cert.positive_roots, sum(1 for r in roots if r > 0))

    def test_counts_add_over_products(self):
        rnd = random.Random(99)
        for _ in range(TRIALS):
            factors = []
            for _ in range(2):
                f = RationalPoly.from_roots(_random_rational_roots(rnd, rnd.randint(0, MAX_DEGREE // 2)))
                if rnd.random() < 0.5:
                    f = f * RationalPoly([rnd.randint(1, 5), 0, 1])
                factors.append(f)
            p, q = factors
            a, b, ab = certify(p), certify(q), certify(p * q)
            self.assertEqual(ab.real_root_count, a.real_root_count + b.real_root_count)
            self.assertEqual(ab.negative_roots, a.negative_roots + b.negative_roots)
            self.assertEqual(ab.zero_root_multiplicity, a.zero_root_multiplicity + b.zero_root_multiplicity)
            self.assertEqual(ab.positive_roots, a.positive_roots + b.positive_roots)
            self.assertEqual(ab.is_real_rooted, a.is_real_rooted and b.is_real_rooted)

    def test_certificates_are_reproducible(self):
        rnd = random.Random(5)
        for _ in range(TRIALS):
            p = RationalPoly.from_roots(_random_rational_roots(rnd, rnd.randint(1, MAX_DEGREE)))
            first, second = certify(p), certify(p)
            self.assertEqual(first.to_dict(), second.to_dict())
            self.assertEqual(first.isolating_intervals, second.isolating_intervals)
            self.assertEqual(first.perturbed_endpoints, second.perturbed_endpoints)

    def test_reversal_invariance(self):
        rnd = random.Random(7)
        for _ in range(20):
            roots = [r for r in _random_rational_roots(rnd, rnd.randint(1, 6)) if r != 0]
            if not roots:
                continue
            p = RationalPoly.from_roots(roots) * RationalPoly([1, 1, 1]) if rnd.random() < 0.5 \
                else RationalPoly.from_roots(roots)
            self.assertEqual(certify(p).is_real_rooted, certify(p.reverse()).is_real_rooted)

    def test_roots_within(self):
        p = RationalPoly.from_roots([Rational(1, 2), 1])
        self.assertTrue(roots_within(p, 0, 1, closed=True))
        self.assertFalse(roots_within(p, 0, 1, closed=False))
        self.assertFalse(roots_within(RationalPoly([1, 0, 1]), -5, 5))
        self.assertTrue(roots_within(RationalPoly.constant(3), 0, 1))


class TestInterlacing(TestCase):
    def test_interlacing(self):
        q = RationalPoly.from_roots([0, 2, 4])
        self.assertTrue(strictly_interlaces(RationalPoly.from_roots([1, 3]), q))
        self.assertFalse(strictly_interlaces(RationalPoly.from_roots([5, 6]), q))
        self.assertFalse(strictly_interlaces(RationalPoly.from_roots([1, Rational(3, 2)]), q))

    def test_shared_root_is_not_strict(self):
        self.assertFalse(strictly_interlaces(RationalPoly.from_roots([0, 3]), RationalPoly.from_roots([0, 2, 4])))

    def test_close_interlacing_roots(self):
        p = RationalPoly.from_roots([Rational(1, 1000)])
        q = RationalPoly.from_roots([0, Rational(1, 500)])
        self.assertTrue(strictly_interlaces(p, q))

    def test_narayana_rows(self):
        self.assertTrue(strictly_interlaces(RationalPoly([1, 3, 1]), RationalPoly([1, 6, 6, 1])))

    def test_interlacing_with_rational_roots(self):
        self.assertTrue(strictly_interlaces(RationalPoly.from_roots([-1, 1]), RationalPoly.from_roots([-2, 0, 2])))
        self.assertTrue(strictly_interlaces(RationalPoly([1, 6, 6, 1]), RationalPoly([1, 10, 20, 10, 1])))

    def test_interlacing_ignores_positive_scaling(self):
        p, q = RationalPoly.from_roots([-1, 1]), RationalPoly.from_roots([-2, 0, 2])
        for c, d in [(3, 1), (1, Rational(1, 7)), (Rational(5, 2), 11)]:
            self.assertTrue(strictly_interlaces(p.scale(c), q.scale(d)))
        self.assertFalse(strictly_interlaces(RationalPoly.from_roots([5, 6]).scale(4), q.scale(9)))

    def test_preconditions(self):
        with self.assertRaises(DegreeError):
            strictly_interlaces(RationalPoly([1, 1]), RationalPoly([1, 1]))
        with self.assertRaises(NotRealRootedError):
            strictly_interlaces(RationalPoly([1, 1]), RationalPoly([1, 0, 1]))
        with self.assertRaises(NotSquarefreeError):
            strictly_interlaces(RationalPoly([1, 1]), RationalPoly([1, 2, 1]))
