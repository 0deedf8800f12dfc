"""
Descent statistics of t-stack sortable permutations: the rows W_t(n, k), k = 0..n-1, counted by
brute force or read from the known closed forms, and the descent polynomials built on them.
"""
import logging
from typing import Iterable, List, Optional, Sequence, Union

from stacksort_roots.algebra.polynomial import RationalPoly
from stacksort_roots.combinatorics.stacksort import check_enumeration, descents_of, partition_letters, sorts_within
from stacksort_roots.model.enums import CountingMethod, get_or_parse
from stacksort_roots.model.exception import OutOfRangeError, UnsupportedClosedFormError
from stacksort_roots.model.table import DescentTable
from stacksort_roots.utilities.exact import as_integer, binomial, catalan, factorial, to_rational

_LOGGER = logging.getLogger(__name__)

__all__ = ['count_partition', 'merge_counts', 'table_brute_force', 'w1_closed', 'w2_closed', 'w2_closed_binomial',
           'w2_row_total_external', 'eulerian_external', 'closed_form_available', 'table_closed_form',
           'descent_polynomial', 'catalan']


def count_partition(n: int, t: int, first_letter: int, max_n: Optional[int] = None) -> List[int]:
    """
    Counts the t-stack sortable permutations of S_n that start with `first_letter`, by descents.
    This is the unit of work handed to the process pool, so it only takes and returns plain values.

    :param n: permutation length
    :param t: number of stack passes
    :param first_letter: the fixed first letter, 1..n
    :param max_n: enumeration cap override

    :return: partial counts, index k = number of descents
    """
    check_enumeration(n, max_n)
    if t < 1:
        raise ValueError(f"The number of passes must be positive, got {t}")
    if not 1 <= first_letter <= n:
        raise ValueError(f"First letter {first_letter} is not in 1..{n}")
    counts = [0] * n
    for letters in partition_letters(n, first_letter):
        if sorts_within(letters, t):
            counts[descents_of(letters)] += 1
    _LOGGER.debug(f"Partition {first_letter} of S_{n}, t = {t}: {counts}")
    return counts


def merge_counts(partials: Iterable[Sequence[int]]) -> List[int]:
    """
    Elementwise sum of partial count vectors of the same length.
    """
    res = None
    for p in partials:
        if res is None:
            res = list(p)
            continue
        if len(p) != len(res):
            raise ValueError(f"Cannot merge partial counts of lengths {len(res)} and {len(p)}")
        res = [a + b for a, b in zip(res, p)]
    if res is None:
        raise ValueError("Nothing to merge")
    return res


def _log_shape(table: DescentTable) -> None:
    _LOGGER.info(f"{table} total={table.total} symmetric={table.is_symmetric()} "
                 f"unimodal={table.is_unimodal()} log_concave={table.is_log_concave()}")
    if table.t == 2 and not table.is_symmetric():
        _LOGGER.warning(f"W_2 row is not symmetric: {table}")


def table_brute_force(n: int, t: int, max_n: Optional[int] = None) -> DescentTable:
    """
    Builds W_t(n, .) literally: every permutation of S_n is sorted up to t times and the sortable ones
    are counted by their number of descents.

    :param n: permutation length, within the enumeration cap
    :param t: number of stack passes, at least 1
    :param max_n: enumeration cap override

    :return: the brute force table
    """
    check_enumeration(n, max_n)
    counts = merge_counts(count_partition(n, t, first, max_n) for first in range(1, n + 1))
    table = DescentTable(n=n, t=t, counts=counts, method=CountingMethod.BRUTE_FORCE)
    _log_shape(table)
    return table


def _check_k(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= k <= n - 1:
        raise OutOfRangeError(n=n, k=k)


def w1_closed(n: int, k: int) -> int:
    """
    Narayana number binom(n, k) binom(n, k+1) / n: stack sortable permutations with k descents.

    :raises OutOfRangeError: unless 0 <= k <= n-1
    """
    _check_k(n, k)
    return as_integer(binomial(n, k) * binomial(n, k + 1) / n)


def w2_closed(n: int, k: int) -> int:
    """
    Number of 2-stack sortable permutations of length n with k descents,

        (n+k)! (2n-k-1)! / ((k+1)! (n-k)! (2k+1)! (2n-2k-1)!)

    evaluated as an exact rational and certified integral.

    :raises OutOfRangeError: unless 0 <= k <= n-1
    """
    _check_k(n, k)
    num = factorial(n + k) * factorial(2 * n - k - 1)
    den = factorial(k + 1) * factorial(n - k) * factorial(2 * k + 1) * factorial(2 * n - 2 * k - 1)
    return as_integer(to_rational(num) / den)


def w2_closed_binomial(n: int, k: int) -> int:
    """
    The binomial form binom(2n-k-1, n-1) binom(n+k, n-1) binom(2n, 2k+1) / (n^2 binom(2n, n)) of
    W_2(n, k), the shape the real-rootedness argument for W_{n,2}(x) works with.
    """
    _check_k(n, k)
    num = binomial(2 * n - k - 1, n - 1) * binomial(n + k, n - 1) * binomial(2 * n, 2 * k + 1)
    return as_integer(num / (n * n * binomial(2 * n, n)))


def w2_row_total_external(n: int) -> int:
    """
    Total number of 2-stack sortable permutations of length n, 2(3n)!/((n+1)!(2n+1)!).
    This is an external known result, used only as a cross-check of the W_2 rows.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return as_integer(to_rational(2 * factorial(3 * n)) / (factorial(n + 1) * factorial(2 * n + 1)))


def eulerian_external(n: int, k: int) -> int:
    """
    Eulerian number A(n, k), permutations of length n with k descents, by the alternating sum
    sum_{j<=k} (-1)^j binom(n+1, j) (k+1-j)^n. External known result, used to cross-check the t >= n-1 rows.
    """
    _check_k(n, k)
    return as_integer(sum((-1) ** j * binomial(n + 1, j) * (k + 1 - j) ** n for j in range(k + 1)))


def closed_form_available(n: int, t: int) -> bool:
    """
    True for t in (1, 2) and for t >= n-1, where every permutation is sortable.
    """
    return t in (1, 2) or t >= n - 1


def table_closed_form(n: int, t: int, max_n: Optional[int] = None) -> DescentTable:
    """
    Builds W_t(n, .) from a closed form: Narayana numbers for t = 1, the W_2 formula for t = 2.
    For t >= n-1 no formula is used, the row is enumerated and tagged `closed_form_unavailable`.

    :raises UnsupportedClosedFormError: for 2 < t < n-1
    """
    if n < 1 or t < 1:
        raise ValueError(f"A descent table needs n >= 1 and t >= 1, got n = {n}, t = {t}")
    if t == 1:
        table = DescentTable(n=n, t=t, counts=[w1_closed(n, k) for k in range(n)], method=CountingMethod.CLOSED_FORM)
    elif t == 2:
        table = DescentTable(n=n, t=t, counts=[w2_closed(n, k) for k in range(n)], method=CountingMethod.CLOSED_FORM)
    elif t >= n - 1:
        _LOGGER.debug(f"No closed form for W_{t}({n}, k), falling back to enumeration")
        brute = table_brute_force(n, t, max_n)
        eulerian = [eulerian_external(n, k) for k in range(n)]
        if brute.counts != eulerian:
            _LOGGER.error(f"Enumerated row {brute.counts} differs from the Eulerian row {eulerian}")
            raise ArithmeticError(f"Eulerian cross-check failed for n = {n}")
        table = DescentTable(n=n, t=t, counts=brute.counts, method=CountingMethod.CLOSED_FORM_UNAVAILABLE)
    else:
        _LOGGER.error(f"Closed form requested for n = {n}, t = {t}")
        raise UnsupportedClosedFormError(n=n, t=t)
    _log_shape(table)
    return table


def descent_polynomial(n: int,
                       t: int,
                       method: Union[str, CountingMethod] = CountingMethod.BRUTE_FORCE,
                       max_n: Optional[int] = None) -> RationalPoly:
    """
    W_{n,t}(x) = sum_k W_t(n, k) x^k, a polynomial of degree exactly n-1.

    :param n: permutation length
    :param t: number of stack passes
    :param method: brute_force, or closed_form (t in (1, 2) or t >= n-1)
    :param max_n: enumeration cap override

    :return: the descent polynomial
    """
    method = get_or_parse(CountingMethod, method)
    if method == CountingMethod.BRUTE_FORCE:
        table = table_brute_force(n, t, max_n)
    else:
        table = table_closed_form(n, t, max_n)
    return table.polynomial()
