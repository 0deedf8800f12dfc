from typing import List, Optional, Sequence, Tuple

from sympy import Rational

from stacksort_roots.model.shared import BaseDictPayload
from stacksort_roots.utilities.conversion import rational_to_str


class RootCertificate(BaseDictPayload):
    """
    Outcome of the Sturm analysis of one polynomial. Root counts include multiplicities.
    """
    _payload_fields = ('degree', 'real_roots', 'real_rooted', 'squarefree', 'negative', 'zero', 'positive')

    def __init__(self,
                 degree: int,
                 real_root_count: int,
                 is_squarefree: bool,
                 negative_roots: int,
                 zero_root_multiplicity: int,
                 positive_roots: int,
                 isolating_intervals: Optional[Sequence[Tuple[Rational, Rational]]] = None,
                 perturbed_endpoints: Optional[Sequence[Tuple[Rational, Rational]]] = None,
                 *args, **kwargs):
        super().__init__(*args, **kwargs)
        if negative_roots + zero_root_multiplicity + positive_roots != real_root_count:
            raise ValueError("Sign counts do not add up to the real root count")
        if real_root_count > degree:
            raise ValueError(f"A degree {degree} polynomial cannot have {real_root_count} real roots")
        self._degree = degree
        self._real_root_count = real_root_count
        self._is_squarefree = is_squarefree
        self._negative = negative_roots
        self._zero = zero_root_multiplicity
        self._positive = positive_roots
        self._intervals = None if isolating_intervals is None else list(isolating_intervals)
        self._perturbed = list(perturbed_endpoints or [])

    @classmethod
    def from_dict(cls, json_dict: dict):
        return cls(degree=json_dict['degree'],
                   real_root_count=json_dict['real_roots'],
                   is_squarefree=json_dict['squarefree'],
                   negative_roots=json_dict['negative'],
                   zero_root_multiplicity=json_dict['zero'],
                   positive_roots=json_dict['positive'])

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def real_root_count(self) -> int:
        return self._real_root_count

    @property
    def is_real_rooted(self) -> bool:
        return self._real_root_count == self._degree

    @property
    def is_squarefree(self) -> bool:
        return self._is_squarefree

    @property
    def negative_roots(self) -> int:
        return self._negative

    @property
    def zero_root_multiplicity(self) -> int:
        return self._zero

    @property
    def positive_roots(self) -> int:
        return self._positive

    @property
    def isolating_intervals(self) -> Optional[List[Tuple[Rational, Rational]]]:
        """
        Disjoint rational intervals (lo, hi), one per real root, available for squarefree polynomials.
        """
        return None if self._intervals is None else list(self._intervals)

    @property
    def perturbed_endpoints(self) -> List[Tuple[Rational, Rational]]:
        """
        (endpoint, replacement) pairs for finite count endpoints that happened to be roots.
        """
        return list(self._perturbed)

    # Names used by the JSON report schema
    @property
    def real_roots(self) -> int:
        return self._real_root_count

    @property
    def real_rooted(self) -> bool:
        return self.is_real_rooted

    @property
    def squarefree(self) -> bool:
        return self._is_squarefree

    @property
    def negative(self) -> int:
        return self._negative

    @property
    def zero(self) -> int:
        return self._zero

    @property
    def positive(self) -> int:
        return self._positive

    def intervals_to_strings(self) -> Optional[List[List[str]]]:
        if self._intervals is None:
            return None
        return [[rational_to_str(lo), rational_to_str(hi)] for lo, hi in self._intervals]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootCertificate):
            return NotImplemented
        return self.to_dict() == other.to_dict() and self._intervals == other._intervals

    def __hash__(self) -> int:
        return hash(tuple(self.to_dict().items()))

    def __str__(self) -> str:
        return (f"degree {self._degree}, {self._real_root_count} real roots "
                f"({self._negative} negative, {self._zero} at zero, {self._positive} positive), "
                f"{'real-rooted' if self.is_real_rooted else 'NOT real-rooted'}, "
                f"{'squarefree' if self._is_squarefree else 'repeated roots'}")
