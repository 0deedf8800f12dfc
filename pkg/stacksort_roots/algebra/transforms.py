"""
Multiplier sequences: coefficientwise transforms f = sum a_k x^k -> sum gamma_k a_k x^k, the
n-sequence test on (x+1)^n, the binomial sequences used to prove W_{n,2}(x) real-rooted, and
stride extraction of coefficients.
"""
from __future__ import annotations

import logging
from typing import Iterable, List, Optional

from sympy import Rational

from stacksort_roots.algebra.polynomial import RationalPoly
from stacksort_roots.algebra.special import HypergeometricSpec, JacobiParams, hypergeometric_poly, jacobi_poly
from stacksort_roots.algebra.sturm import certify, roots_same_sign, roots_within
from stacksort_roots.model.certificate import RootCertificate
from stacksort_roots.model.exception import DegreeError, ParameterError
from stacksort_roots.model.typing import RationalLike
from stacksort_roots.utilities.conversion import rational_to_str
from stacksort_roots.utilities.exact import binomial, to_rational

_LOGGER = logging.getLogger(__name__)


class MultiplierSequence(object):
    """
    A finite sequence gamma_0..gamma_m of rationals, m being its order.
    """
    def __init__(self, gamma: Iterable[RationalLike], m: Optional[int] = None):
        self._gamma = tuple(to_rational(g) for g in gamma)
        if not self._gamma:
            raise ParameterError("A multiplier sequence needs at least one entry")
        if m is not None and m != len(self._gamma) - 1:
            raise ParameterError(f"Declared order {m} does not match {len(self._gamma)} entries")

    @property
    def gamma(self) -> List[Rational]:
        return list(self._gamma)

    @property
    def m(self) -> int:
        return len(self._gamma) - 1

    def __getitem__(self, k: int) -> Rational:
        return self._gamma[k]

    def __len__(self) -> int:
        return len(self._gamma)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiplierSequence):
            return NotImplemented
        return self._gamma == other._gamma

    def __hash__(self) -> int:
        return hash(self._gamma)

    def to_dict(self) -> dict:
        return {"gamma": [rational_to_str(g) for g in self._gamma]}

    def __repr__(self) -> str:
        return f"MultiplierSequence({[rational_to_str(g) for g in self._gamma]})"


class NSequenceVerdict(object):
    """
    Answer of `is_n_sequence`. Truthy when the sequence passed; carries the image of (x+1)^n and its
    certificate (None when the image is the zero polynomial).
    """
    def __init__(self, n: int, image: RationalPoly, certificate: Optional[RootCertificate], holds: bool):
        self.n = n
        self.image = image
        self.certificate = certificate
        self.holds = holds

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {"n": self.n,
                "holds": self.holds,
                "image": self.image.to_dict(),
                "certificate": None if self.certificate is None else self.certificate.to_dict()}

    def __repr__(self) -> str:
        return f"NSequenceVerdict(n={self.n}, holds={self.holds})"


def apply_sequence(g: MultiplierSequence, f: RationalPoly) -> RationalPoly:
    """
    Multiplies coefficient i of f by gamma_i. The degree drops when the top entries vanish.

    :raises DegreeError: when deg f exceeds the order of the sequence
    """
    if f.degree > g.m:
        raise DegreeError(f"Cannot apply an order {g.m} sequence to a degree {f.degree} polynomial")
    return RationalPoly(g[i] * a for i, a in enumerate(f.coefficients))


def is_n_sequence(g: MultiplierSequence, n: int) -> NSequenceVerdict:
    """
    Decides whether g is an n-sequence: gamma maps every real-rooted polynomial of degree <= n to a
    real-rooted one exactly when gamma[(x+1)^n] is real-rooted with zeros of one sign.

    :param g: sequence of order at least n
    :param n: the degree bound

    :return: the verdict, usable as a boolean
    """
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    if g.m < n:
        raise DegreeError(f"An order {g.m} sequence cannot be tested as an {n}-sequence")
    image = apply_sequence(g, RationalPoly.binomial_power(n))
    if image.is_zero():
        _LOGGER.debug(f"{g} annihilates (x+1)^{n}")
        return NSequenceVerdict(n, image, None, True)
    cert = certify(image)
    holds = cert.is_real_rooted and roots_same_sign(cert)
    _LOGGER.debug(f"{g} on (x+1)^{n}: {cert}, n-sequence = {holds}")
    return NSequenceVerdict(n, image, cert, holds)


def _check_r(r: RationalLike) -> Rational:
    r = to_rational(r)
    if r < 0:
        raise ParameterError(f"r must be nonnegative, got {r}")
    return r


def lemma2_sequence(n: int, r: RationalLike) -> MultiplierSequence:
    """
    gamma_k = binom(-n-r, k), k = 0..n, an n-sequence for every rational r >= 0.
    """
    r = _check_r(r)
    return MultiplierSequence(binomial(-n - r, k) for k in range(n + 1))


def post_lemma_sequence(n: int, order: Optional[int] = None) -> MultiplierSequence:
    """
    gamma_k = binom(2n-k-1, n-1) for k = 0..order (order defaults to n).
    """
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    order = n if order is None else order
    return MultiplierSequence(binomial(2 * n - k - 1, n - 1) for k in range(order + 1))


def binomial_shift_sequence(n: int) -> MultiplierSequence:
    """
    gamma_k = binom(n+k, n-1) for k = 0..n-1.
    """
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    return MultiplierSequence(binomial(n + k, n - 1) for k in range(n))


def verify_lemma2_identity(n: int, r: RationalLike) -> bool:
    """
    Checks coefficientwise that

        gamma[(x+1)^n] = 2F1(-n, n+r; 1; x) = P_n^(0, r-1)(1-2x)

    for gamma = `lemma2_sequence(n, r)`.
    """
    r = _check_r(r)
    image = apply_sequence(lemma2_sequence(n, r), RationalPoly.binomial_power(n))
    series = hypergeometric_poly(HypergeometricSpec(-n, n + r, 1))
    jacobi = jacobi_poly(JacobiParams(n, 0, r - 1)).compose_linear(-2, 1)
    if not image == series == jacobi:
        _LOGGER.warning(f"Binomial sequence identity fails at n = {n}, r = {r}: {image} | {series} | {jacobi}")
        return False
    return True


def verify_lemma2_zeros(n: int, r: RationalLike) -> bool:
    """
    True when gamma[(x+1)^n], gamma = `lemma2_sequence(n, r)`, is real-rooted with all zeros in [0, 1].
    """
    image = apply_sequence(lemma2_sequence(n, r), RationalPoly.binomial_power(n))
    cert = certify(image)
    res = cert.is_real_rooted and roots_within(image, 0, 1, closed=True)
    if not res:
        _LOGGER.warning(f"Zeros of the binomial sequence image escape [0, 1] at n = {n}, r = {r}: {cert}")
    return res


def verify_post_lemma_identity(n: int) -> bool:
    """
    Checks coefficientwise that

        sum_k binom(2n-k-1, n-1) binom(n, k) x^k = (-1)^n sum_k binom(-n, k) binom(n, k) (-x)^(n-k)

    for k = 0..n.
    """
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    lhs = apply_sequence(post_lemma_sequence(n), RationalPoly.binomial_power(n))
    rhs = RationalPoly.zero()
    for k in range(n + 1):
        rhs = rhs + RationalPoly.monomial(n - k, binomial(-n, k) * binomial(n, k) * (-1) ** (n - k))
    rhs = rhs.scale((-1) ** n)
    if lhs != rhs:
        _LOGGER.warning(f"Post-lemma identity fails at n = {n}: {lhs} != {rhs}")
        return False
    return True


def stride_extract(f: RationalPoly, stride: int, offset: int = 0) -> RationalPoly:
    """
    Returns sum_i a_{stride*i + offset} x^i.

    :param f: the source polynomial
    :param stride: step between extracted coefficients, at least 1
    :param offset: index of the first extracted coefficient, 0 <= offset < stride

    :return: the extracted polynomial
    """
    if stride < 1:
        raise ParameterError(f"Stride must be positive, got {stride}")
    if not 0 <= offset < stride:
        raise ParameterError(f"Offset must satisfy 0 <= offset < {stride}, got {offset}")
    return RationalPoly(f.coefficient(i) for i in range(offset, f.degree + 1, stride))


def odd_binomial_poly(n: int) -> RationalPoly:
    """
    sum_{k<n} binom(2n, 2k+1) x^k, i.e. the odd-index coefficients of (1+x)^(2n). The same polynomial
    is extracted from the even-index coefficients of x(1+x)^(2n), and both extractions must agree.
    """
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    power = RationalPoly.binomial_power(2 * n)
    res = stride_extract(power, 2, 1)
    shifted = stride_extract(RationalPoly.x() * power, 2, 0).exact_divide(RationalPoly.x())
    if res != shifted:
        raise ArithmeticError(f"Odd binomial extractions disagree at n = {n}: {res} != {shifted}")
    return res
