import os
from unittest import TestCase, skipUnless
from unittest.mock import patch

from stacksort_roots.algebra.polynomial import RationalPoly
from stacksort_roots.algebra.sturm import certify, strictly_interlaces
from stacksort_roots.combinatorics.descents import closed_form_available, count_partition, descent_polynomial, \
    eulerian_external, merge_counts, table_brute_force, table_closed_form, w1_closed, w2_closed, \
    w2_closed_binomial, w2_row_total_external
from stacksort_roots.model.enums import CountingMethod
from stacksort_roots.model.exception import EnumerationLimitError, OutOfRangeError, UnsupportedClosedFormError
from stacksort_roots.model.table import DescentTable
from stacksort_roots.utilities.exact import catalan

SLOW = os.environ.get('STACKSORT_SLOW_TESTS')
MAX_BRUTE_N = 9 if SLOW else 7


class TestBruteForce(TestCase):
    def test_small_tables(self):
        self.assertEqual(table_brute_force(3, 1).counts, [1, 3, 1])
        self.assertEqual(table_brute_force(3, 2).counts, [1, 4, 1])
        self.assertEqual(table_brute_force(4, 2).counts, [1, 10, 10, 1])
        self.assertEqual(table_brute_force(4, 2).total, 22)
        self.assertEqual(table_brute_force(1, 1).counts, [1])

    def test_partitions(self):
        partials = [count_partition(4, 1, first) for first in range(1, 5)]
        self.assertEqual(merge_counts(partials), [1, 6, 6, 1])
        # 231-avoiding permutations starting with 4 are 4 followed by a 231-avoiding word
        self.assertEqual(sum(partials[3]), catalan(3))
        with self.assertRaises(ValueError):
            count_partition(4, 1, 5)

    def test_merge_counts(self):
        self.assertEqual(merge_counts([[1, 2], [3, 4], [0, 1]]), [4, 7])
        with self.assertRaises(ValueError):
            merge_counts([[1, 2], [1]])
        with self.assertRaises(ValueError):
            merge_counts([])

    def test_enumeration_limit(self):
        with self.assertRaises(EnumerationLimitError):
            table_brute_force(6, 1, max_n=5)

    def test_narayana_oracle(self):
        for n in range(1, MAX_BRUTE_N + 1):
            self.assertEqual(table_brute_force(n, 1).counts, [w1_closed(n, k) for k in range(n)])

    def test_w2_oracle(self):
        for n in range(1, MAX_BRUTE_N + 1):
            self.assertEqual(table_brute_force(n, 2).counts, [w2_closed(n, k) for k in range(n)])

    def test_eulerian_rows(self):
        for n in range(2, 7):
            self.assertEqual(table_brute_force(n, n - 1).counts, [eulerian_external(n, k) for k in range(n)])

    def test_narayana_symmetry(self):
        for n in range(1, MAX_BRUTE_N + 1):
            self.assertTrue(table_brute_force(n, 1).is_symmetric())

    def test_asymmetric_w2_row_is_logged(self):
        with patch('stacksort_roots.combinatorics.descents.merge_counts', return_value=[1, 9, 11, 1]):
            with self.assertLogs('stacksort_roots.combinatorics.descents', level='WARNING') as logs:
                table = table_brute_force(4, 2)
        self.assertEqual(table.counts, [1, 9, 11, 1])
        self.assertIn("not symmetric", logs.output[0])

    def test_intermediate_t_shape(self):
        # Not covered by a closed form, the rows are still unimodal for the small n we can enumerate
        table = table_brute_force(6, 3)
        self.assertEqual(table.counts[0], 1)
        self.assertTrue(table.is_unimodal())


class TestClosedForms(TestCase):
    def test_narayana_values(self):
        self.assertEqual(w1_closed(5, 0), 1)
        self.assertEqual(w1_closed(3, 1), 3)
        self.assertEqual(w1_closed(4, 1), 6)
        self.assertEqual(sum(w1_closed(10, k) for k in range(10)), catalan(10))

    def test_w2_values(self):
        self.assertEqual(w2_closed(3, 1), 4)
        self.assertEqual(w2_closed(4, 1), 10)
        self.assertEqual([w2_closed(5, k) for k in range(5)], [1, 20, 49, 20, 1])
        for n in range(1, 15):
            self.assertEqual(w2_closed(n, n - 1), 1)

    def test_w2_binomial_form(self):
        self.assertEqual(w2_closed_binomial(3, 1), 4)
        self.assertEqual(w2_closed_binomial(4, 2), 10)
        self.assertEqual(w2_closed_binomial(5, 0), 1)
        for n in range(1, 51):
            for k in range(n):
                self.assertEqual(w2_closed_binomial(n, k), w2_closed(n, k))

    def test_w2_row_totals(self):
        self.assertEqual([w2_row_total_external(n) for n in range(1, 7)], [1, 2, 6, 22, 91, 408])
        for n in range(1, 30):
            self.assertEqual(sum(w2_closed(n, k) for k in range(n)), w2_row_total_external(n))

    def test_out_of_range(self):
        for f in (w1_closed, w2_closed, w2_closed_binomial, eulerian_external):
            with self.assertRaises(OutOfRangeError):
                f(4, 4)
            with self.assertRaises(OutOfRangeError):
                f(4, -1)

    def test_eulerian(self):
        self.assertEqual([eulerian_external(4, k) for k in range(4)], [1, 11, 11, 1])


class TestTables(TestCase):
    def test_closed_form_tables(self):
        t1 = table_closed_form(4, 1)
        self.assertEqual(t1.counts, [1, 6, 6, 1])
        self.assertEqual(t1.counting_method, CountingMethod.CLOSED_FORM)
        self.assertTrue(t1.same_counts(table_brute_force(4, 1)))
        self.assertNotEqual(t1, table_brute_force(4, 1))

    def test_closed_form_fallback(self):
        table = table_closed_form(5, 4)
        self.assertEqual(table.method, "closed_form_unavailable")
        self.assertEqual(table.total, 120)

    def test_unsupported_closed_form(self):
        self.assertFalse(closed_form_available(6, 3))
        self.assertTrue(closed_form_available(6, 5))
        with self.assertRaises(UnsupportedClosedFormError) as ctx:
            table_closed_form(6, 3)
        self.assertEqual((ctx.exception.n, ctx.exception.t), (6, 3))

    def test_validation(self):
        with self.assertRaises(ValueError):
            DescentTable(3, 1, [1, 3])
        with self.assertRaises(ValueError):
            DescentTable(3, 1, [2, 2, 1])
        with self.assertRaises(ValueError):
            DescentTable(3, 1, [1, 4, 1])
        with self.assertRaises(ValueError):
            DescentTable(3, 2, [1, 3, 1])

    def test_shapes(self):
        table = DescentTable(5, 2, [1, 20, 49, 20, 1], CountingMethod.CLOSED_FORM)
        self.assertTrue(table.is_unimodal())
        self.assertTrue(table.is_log_concave())
        self.assertTrue(table.is_symmetric())
        odd = DescentTable(4, 3, [1, 11, 11, 1])
        self.assertTrue(odd.is_symmetric())

    def test_payload(self):
        table = table_closed_form(3, 2)
        payload = table.to_dict()
        self.assertEqual(payload, {"n": 3, "t": 2, "method": "closed_form", "counts": [1, 4, 1]})
        self.assertEqual(DescentTable.from_dict(payload), table)


class TestDescentPolynomials(TestCase):
    def test_polynomials(self):
        self.assertEqual(descent_polynomial(4, 1, CountingMethod.CLOSED_FORM), RationalPoly([1, 6, 6, 1]))
        self.assertEqual(descent_polynomial(4, 2), RationalPoly([1, 10, 10, 1]))
        self.assertEqual(descent_polynomial(7, 1, "closed_form").coefficient(0), 1)

    def test_degree(self):
        for n in range(1, 8):
            for t in (1, 2):
                self.assertEqual(descent_polynomial(n, t, CountingMethod.CLOSED_FORM).degree, n - 1)

    def test_unsupported(self):
        with self.assertRaises(UnsupportedClosedFormError):
            descent_polynomial(7, 4, CountingMethod.CLOSED_FORM)

    def test_closed_forms_real_rooted(self):
        for n in range(1, 16):
            for t in (1, 2):
                cert = certify(descent_polynomial(n, t, CountingMethod.CLOSED_FORM))
                self.assertTrue(cert.is_real_rooted)
                if t == 1:
                    self.assertTrue(cert.is_squarefree)

    @skipUnless(SLOW, "certification up to n = 40 runs with STACKSORT_SLOW_TESTS")
    def test_closed_forms_real_rooted_up_to_40(self):
        for n in range(16, 41):
            for t in (1, 2):
                cert = certify(descent_polynomial(n, t, CountingMethod.CLOSED_FORM))
                self.assertTrue(cert.is_real_rooted)
                self.assertEqual(cert.positive_roots, 0)
                if t == 1:
                    self.assertTrue(cert.is_squarefree)

    def test_consecutive_narayana_polynomials_interlace(self):
        for n in range(2, 21 if SLOW else 11):
            p = descent_polynomial(n, 1, CountingMethod.CLOSED_FORM)
            q = descent_polynomial(n + 1, 1, CountingMethod.CLOSED_FORM)
            self.assertTrue(strictly_interlaces(p, q), f"W_{n},1 and W_{n + 1},1")
