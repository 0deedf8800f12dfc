from __future__ import annotations

import logging
from typing import Iterable, List, Optional, Tuple, Union

from sympy import Poly, QQ, Rational, Symbol

from stacksort_roots.model.exception import DegreeError
from stacksort_roots.model.typing import RationalLike
from stacksort_roots.utilities.conversion import rational_to_str
from stacksort_roots.utilities.exact import binomial, to_rational

_LOGGER = logging.getLogger(__name__)

X = Symbol('x')


def _as_qq_poly(poly: Poly) -> Poly:
    return Poly(poly.as_expr(), X, domain=QQ) if poly.get_domain() != QQ or poly.gens != (X,) else poly


class RationalPoly(object):
    """
    Univariate polynomial with exact rational coefficients, stored in canonical trimmed form
    (no zero leading coefficient). The coefficient list is indexed by power: coefficients[i]
    multiplies x^i. Arithmetic is delegated to a sympy `Poly` over QQ.
    """

    def __init__(self, coefficients: Iterable[RationalLike] = ()):
        coeffs = [to_rational(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)
        self._poly = Poly(list(reversed(coeffs)) or [0], X, domain=QQ)

    @classmethod
    def from_sympy(cls, poly: Poly) -> RationalPoly:
        """
        Wraps a sympy polynomial in x (any coefficient domain contained in QQ).
        """
        poly = _as_qq_poly(poly)
        return cls(reversed(poly.all_coeffs()))

    @classmethod
    def constant(cls, c: RationalLike) -> RationalPoly:
        return cls((c,))

    @classmethod
    def zero(cls) -> RationalPoly:
        return cls(())

    @classmethod
    def one(cls) -> RationalPoly:
        return cls((1,))

    @classmethod
    def x(cls) -> RationalPoly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> RationalPoly:
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike], leading: RationalLike = 1) -> RationalPoly:
        """
        Builds leading * prod (x - r) over the given roots.
        """
        res = cls.constant(leading)
        for r in roots:
            res = res * cls((-to_rational(r), 1))
        return res

    @classmethod
    def binomial_power(cls, n: int, a: RationalLike = 1, b: RationalLike = 1) -> RationalPoly:
        """
        (a + b x)^n expanded with exact binomial coefficients.
        """
        a, b = to_rational(a), to_rational(b)
        return cls(binomial(n, k) * a ** (n - k) * b ** k for k in range(n + 1))

    @property
    def sympy(self) -> Poly:
        return self._poly

    @property
    def coefficients(self) -> List[Rational]:
        return list(self._coeffs)

    def coefficient(self, i: int) -> Rational:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Rational(0)

    @property
    def degree(self) -> int:
        """
        Degree of the polynomial; the zero polynomial has degree -1.
        """
        return len(self._coeffs) - 1

    @property
    def leading_coefficient(self) -> Rational:
        return self._coeffs[-1] if self._coeffs else Rational(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    # Ring operations

    def add(self, other: Union[RationalPoly, RationalLike]) -> RationalPoly:
        other = _coerce(other)
        return RationalPoly.from_sympy(self._poly + other._poly)

    def multiply(self, other: Union[RationalPoly, RationalLike]) -> RationalPoly:
        other = _coerce(other)
        return RationalPoly.from_sympy(self._poly * other._poly)

    def scale(self, c: RationalLike) -> RationalPoly:
        c = to_rational(c)
        return RationalPoly(c * a for a in self._coeffs)

    def derivative(self) -> RationalPoly:
        return RationalPoly(i * a for i, a in enumerate(self._coeffs) if i > 0)

    def evaluate(self, value: RationalLike) -> Rational:
        """
        Exact value of the polynomial at a rational point.
        """
        return Rational(self._poly.eval(to_rational(value)))

    def compose_linear(self, a: RationalLike, b: RationalLike) -> RationalPoly:
        """
        Returns f(a*x + b).
        """
        inner = Poly([to_rational(a), to_rational(b)], X, domain=QQ)
        return RationalPoly.from_sympy(self._poly.compose(inner))

    def reverse(self, degree: Optional[int] = None) -> RationalPoly:
        """
        Returns x^d f(1/x), i.e. coefficient i of the result is coefficient d-i of f.

        :param degree: the declared degree d; defaults to the actual degree

        :return: the reversed polynomial
        """
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise DegreeError(f"Cannot reverse a degree {self.degree} polynomial with declared degree {d}")
        if self.is_zero():
            return self
        padded = list(self._coeffs) + [Rational(0)] * (d - self.degree)
        return RationalPoly(reversed(padded))

    def divmod(self, other: RationalPoly) -> Tuple[RationalPoly, RationalPoly]:
        q, r = self._poly.div(_coerce(other)._poly)
        return RationalPoly.from_sympy(q), RationalPoly.from_sympy(r)

    def exact_divide(self, other: Union[RationalPoly, RationalLike]) -> RationalPoly:
        q, r = self.divmod(_coerce(other))
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # Squarefree structure

    def gcd(self, other: RationalPoly) -> RationalPoly:
        return RationalPoly.from_sympy(self._poly.gcd(_coerce(other)._poly))

    def squarefree_part(self) -> RationalPoly:
        return RationalPoly.from_sympy(self._poly.sqf_part())

    def squarefree_decomposition(self) -> List[Tuple[RationalPoly, int]]:
        """
        Yun decomposition f = c * prod g_i^i with pairwise coprime squarefree monic g_i.
        Constant factors are left out.
        """
        _, factors = self._poly.sqf_list()
        return [(RationalPoly.from_sympy(g), m) for g, m in factors if g.degree() > 0]

    def is_squarefree(self) -> bool:
        return self.gcd(self.derivative()).is_constant()

    def zero_root_multiplicity(self) -> int:
        i = 0
        while i < len(self._coeffs) and self._coeffs[i] == 0:
            i += 1
        return i

    def to_strings(self) -> List[str]:
        return [rational_to_str(c) for c in self._coeffs]

    def to_dict(self) -> dict:
        return {"coeffs": self.to_strings()}

    # Operators

    def __add__(self, other):
        return self.add(other)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self.add(-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other).add(-self)

    def __mul__(self, other):
        return self.multiply(other)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if power < 0:
            raise ValueError("Negative powers are not polynomials")
        return RationalPoly.from_sympy(self._poly ** power)

    def __call__(self, value: RationalLike) -> Rational:
        return self.evaluate(value)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Rational)):
            return self._coeffs == RationalPoly.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(rational_to_str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{rational_to_str(c)}*{mono}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"RationalPoly({self.to_strings()})"


def _coerce(value: Union[RationalPoly, RationalLike]) -> RationalPoly:
    if isinstance(value, RationalPoly):
        return value
    return RationalPoly.constant(value)
