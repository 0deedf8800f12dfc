from __future__ import annotations

import logging
from typing import Iterable, List, Union

from stacksort_roots.algebra.polynomial import RationalPoly
from stacksort_roots.model.enums import CountingMethod, get_or_parse
from stacksort_roots.model.shared import BaseDictPayload
from stacksort_roots.utilities.exact import catalan, factorial

_LOGGER = logging.getLogger(__name__)


class DescentTable(BaseDictPayload):
    """
    The row W_t(n, k), k = 0..n-1, of t-stack sortable permutations of length n counted by descents.
    """
    _payload_fields = ('n', 't', 'method', 'counts')

    def __init__(self,
                 n: int,
                 t: int,
                 counts: Iterable[int],
                 method: Union[str, CountingMethod] = CountingMethod.BRUTE_FORCE,
                 *args, **kwargs):
        super().__init__(*args, **kwargs)
        if n < 1 or t < 1:
            raise ValueError(f"A descent table needs n >= 1 and t >= 1, got n = {n}, t = {t}")
        self._n = n
        self._t = t
        self._counts = tuple(int(c) for c in counts)
        self._method = get_or_parse(CountingMethod, method)
        self._validate()

    def _validate(self) -> None:
        n, t, counts = self._n, self._t, self._counts
        if len(counts) != n:
            raise ValueError(f"Expected {n} counts, got {len(counts)}")
        if any(c < 0 for c in counts):
            raise ValueError(f"Counts must be nonnegative: {counts}")
        # The identity is the only permutation without descents and it is always sortable
        if counts[0] != 1:
            raise ValueError(f"W_{t}({n}, 0) must be 1, got {counts[0]}")
        total = sum(counts)
        if total > factorial(n):
            raise ValueError(f"Table total {total} exceeds {n}!")
        if t == 1 and total != catalan(n):
            raise ValueError(f"Stack sortable permutations of length {n} must total Catalan({n}) = {catalan(n)}, "
                             f"got {total}")
        if t >= n - 1 and total != factorial(n):
            raise ValueError(f"Every permutation of length {n} is {t}-stack sortable, expected {factorial(n)}, "
                             f"got {total}")

    @property
    def n(self) -> int:
        return self._n

    @property
    def t(self) -> int:
        return self._t

    @property
    def counts(self) -> List[int]:
        return list(self._counts)

    @property
    def method(self) -> str:
        return self._method.value

    @property
    def counting_method(self) -> CountingMethod:
        return self._method

    @property
    def total(self) -> int:
        return sum(self._counts)

    def is_symmetric(self) -> bool:
        return self._counts == self._counts[::-1]

    def is_unimodal(self) -> bool:
        """
        True when the counts weakly rise to a peak and then weakly fall.
        """
        c = self._counts
        i = 0
        while i + 1 < len(c) and c[i] <= c[i + 1]:
            i += 1
        while i + 1 < len(c) and c[i] >= c[i + 1]:
            i += 1
        return i == len(c) - 1

    def is_log_concave(self) -> bool:
        c = self._counts
        return all(c[k] * c[k] >= c[k - 1] * c[k + 1] for k in range(1, len(c) - 1))

    def polynomial(self):
        """
        The descent polynomial W_{n,t}(x) = sum_k W_t(n, k) x^k.
        """
        return RationalPoly(self._counts)

    def same_counts(self, other: DescentTable) -> bool:
        return self._n == other._n and self._t == other._t and self._counts == other._counts

    def __eq__(self, other) -> bool:
        if not isinstance(other, DescentTable):
            return NotImplemented
        return self.same_counts(other) and self._method == other._method

    def __hash__(self) -> int:
        return hash((self._n, self._t, self._counts, self._method))

    def __str__(self) -> str:
        return f"W_{self._t}({self._n}, k) = {list(self._counts)} [{self._method.value}]"
