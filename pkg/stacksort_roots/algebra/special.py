"""
Terminating Gauss hypergeometric series and Jacobi polynomials with rational parameters, and the
coefficientwise checks of the identities that tie them to the Narayana polynomials.

Every substitution is carried out inside the polynomial ring: rational arguments such as
(x-1)/(x+1) are cleared against the matching power of their denominator before comparing.
"""
import logging
from typing import List

from sympy import Rational

from stacksort_roots.algebra.polynomial import RationalPoly
from stacksort_roots.algebra.sturm import certify, roots_within
from stacksort_roots.combinatorics.descents import descent_polynomial
from stacksort_roots.model.enums import CountingMethod
from stacksort_roots.model.exception import ParameterError
from stacksort_roots.model.typing import RationalLike
from stacksort_roots.utilities.conversion import rational_to_str
from stacksort_roots.utilities.exact import factorial, pochhammer, to_rational

_LOGGER = logging.getLogger(__name__)


class HypergeometricSpec(object):
    """
    Parameters (a, b; c) of a terminating 2F1 series. `a` must be a nonpositive integer, so that the
    series stops at degree -a, and (c)_k must not vanish for k <= -a.
    """
    def __init__(self, a: RationalLike, b: RationalLike, c: RationalLike):
        self.a = to_rational(a)
        self.b = to_rational(b)
        self.c = to_rational(c)
        if not self.a.is_integer or self.a > 0:
            raise ParameterError(f"2F1 terminates only for a nonpositive integer a, got a = {self.a}")
        if pochhammer(self.c, self.degree_bound) == 0:
            raise ParameterError(f"(c)_k vanishes for some k <= {self.degree_bound} with c = {self.c}")

    @property
    def degree_bound(self) -> int:
        return int(-self.a)

    def __repr__(self) -> str:
        return f"HypergeometricSpec(a={self.a}, b={self.b}, c={self.c})"


class JacobiParams(object):
    """
    Degree and parameters of P_n^(alpha, beta). The hypergeometric expansion divides by (1+alpha)_k,
    so alpha must not be a negative integer >= -n. beta is unrestricted (beta = -1 included).
    """
    def __init__(self, n: int, alpha: RationalLike, beta: RationalLike):
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ParameterError(f"Jacobi degree must be a nonnegative integer, got {n!r}")
        self.n = n
        self.alpha = to_rational(alpha)
        self.beta = to_rational(beta)
        if pochhammer(1 + self.alpha, n) == 0:
            raise ParameterError(f"(1+alpha)_k vanishes for some k <= {n} with alpha = {self.alpha}")

    def to_dict(self) -> dict:
        return {"n": self.n, "alpha": rational_to_str(self.alpha), "beta": rational_to_str(self.beta)}

    def __repr__(self) -> str:
        return f"JacobiParams(n={self.n}, alpha={self.alpha}, beta={self.beta})"


def hypergeometric_coefficients(spec: HypergeometricSpec) -> List[Rational]:
    """
    Terms (a)_k (b)_k / ((c)_k k!) for k = 0..-a.
    """
    return [pochhammer(spec.a, k) * pochhammer(spec.b, k) / (pochhammer(spec.c, k) * factorial(k))
            for k in range(spec.degree_bound + 1)]


def hypergeometric_poly(spec: HypergeometricSpec) -> RationalPoly:
    """
    The terminating series 2F1(a, b; c; z) as an exact polynomial in z of degree at most -a.
    """
    return RationalPoly(hypergeometric_coefficients(spec))


def _jacobi_prefactor(p: JacobiParams) -> Rational:
    return pochhammer(1 + p.alpha, p.n) / factorial(p.n)


def jacobi_poly(p: JacobiParams) -> RationalPoly:
    """
    P_n^(alpha, beta)(x) = ((1+alpha)_n / n!) 2F1(-n, 1+alpha+beta+n; 1+alpha; (1-x)/2).

    :param p: degree and parameters

    :return: the Jacobi polynomial in x
    """
    series = hypergeometric_poly(HypergeometricSpec(-p.n, 1 + p.alpha + p.beta + p.n, 1 + p.alpha))
    res = series.compose_linear(Rational(-1, 2), Rational(1, 2)).scale(_jacobi_prefactor(p))
    _LOGGER.debug(f"P_{p.n}^({p.alpha}, {p.beta})(x) = {res}")
    return res


def _eq2_expansion(p: JacobiParams) -> RationalPoly:
    # ((x+1)/2)^n ((x-1)/(x+1))^k = (x-1)^k (x+1)^(n-k) / 2^n, a polynomial for every k <= n
    coeffs = hypergeometric_coefficients(HypergeometricSpec(-p.n, -p.beta - p.n, 1 + p.alpha))
    res = RationalPoly.zero()
    for k, c in enumerate(coeffs):
        term = RationalPoly.binomial_power(k, -1, 1) * RationalPoly.binomial_power(p.n - k, 1, 1)
        res = res + term.scale(c)
    return res.scale(_jacobi_prefactor(p) / Rational(2) ** p.n)


def verify_eq2_consistency(p: JacobiParams) -> bool:
    """
    Checks coefficientwise that

        P_n^(alpha, beta)(x) = ((1+alpha)_n / n!) ((x+1)/2)^n 2F1(-n, -beta-n; 1+alpha; (x-1)/(x+1))

    agrees with the expansion at (1-x)/2 built by `jacobi_poly`.
    """
    lhs = jacobi_poly(p)
    rhs = _eq2_expansion(p)
    if lhs != rhs:
        _LOGGER.warning(f"Jacobi expansions disagree for {p}: {lhs} != {rhs}")
        return False
    return True


def verify_narayana_jacobi(n: int) -> bool:
    """
    Checks W_{n+1,1}(x) = (1/(n+1)) (1-x)^n P_n^(1,1)((1+x)/(1-x)) coefficientwise. Writing
    P_n^(1,1)(y) = sum c_j y^j, the right side is sum c_j (1+x)^j (1-x)^(n-j) / (n+1).
    """
    if n < 0:
        raise ParameterError(f"n must be nonnegative, got {n}")
    jacobi = jacobi_poly(JacobiParams(n, 1, 1))
    rhs = RationalPoly.zero()
    for j, c in enumerate(jacobi.coefficients):
        rhs = rhs + (RationalPoly.binomial_power(j, 1, 1) * RationalPoly.binomial_power(n - j, 1, -1)).scale(c)
    rhs = rhs.scale(Rational(1, n + 1))
    narayana = descent_polynomial(n + 1, 1, CountingMethod.CLOSED_FORM)
    if rhs != narayana:
        _LOGGER.warning(f"Narayana-Jacobi identity fails at n = {n}: {rhs} != {narayana}")
        return False
    return True


def verify_narayana_hypergeometric(n: int) -> bool:
    """
    Checks W_{n+1,1}(x) = 2F1(-n, -n-1; 2; x) coefficientwise.
    """
    if n < 0:
        raise ParameterError(f"n must be nonnegative, got {n}")
    series = hypergeometric_poly(HypergeometricSpec(-n, -n - 1, 2))
    narayana = descent_polynomial(n + 1, 1, CountingMethod.CLOSED_FORM)
    if series != narayana:
        _LOGGER.warning(f"Narayana hypergeometric form fails at n = {n}: {series} != {narayana}")
        return False
    return True


def verify_jacobi_zeros(p: JacobiParams) -> bool:
    """
    True when P_n^(alpha, beta) is certified squarefree and real-rooted with every zero in (-1, 1).
    """
    poly = jacobi_poly(p)
    if poly.is_zero():
        _LOGGER.warning(f"Jacobi polynomial vanishes identically for {p}")
        return False
    cert = certify(poly)
    res = cert.is_squarefree and cert.is_real_rooted and roots_within(poly, -1, 1, closed=False)
    if not res:
        _LOGGER.warning(f"Zeros of P_{p.n}^({p.alpha}, {p.beta}) are not simple and inside (-1, 1): {cert}")
    return res
