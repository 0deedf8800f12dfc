"""
Sturm sequence certification of real roots. Every decision is taken on exact integers: the chain
is a primitive pseudo-remainder sequence over ZZ and signs at a rational point p/q are read from
the homogenized value q^d f(p/q).
"""
from __future__ import annotations

import logging
from typing import List, Tuple

from sympy import Poly, Rational, ZZ, oo

from stacksort_roots.algebra.polynomial import RationalPoly, X
from stacksort_roots.model.certificate import RootCertificate
from stacksort_roots.model.exception import (DegreeError, NotRealRootedError, NotSquarefreeError,
                                             ZeroPolynomialError)
from stacksort_roots.model.typing import ExtendedRational, RationalInterval
from stacksort_roots.utilities.exact import to_rational

_LOGGER = logging.getLogger(__name__)


def _sign(v) -> int:
    # v may be a python int or a sympy Rational; sympy comparisons are not ints
    if v > 0:
        return 1
    return -1 if v < 0 else 0


def _primitive_zz(poly: Poly) -> Poly:
    # Positive rescaling to coprime integer coefficients; signs are preserved
    _, p = poly.clear_denoms(convert=True)
    if p.get_domain() != ZZ:
        p = p.set_domain(ZZ)
    cont, pp = p.primitive()
    return -pp if cont < 0 else pp


def _int_coeffs(poly: Poly) -> Tuple[int, ...]:
    return tuple(int(c) for c in poly.all_coeffs())


def _eval_sign(coeffs: Tuple[int, ...], value: Rational) -> int:
    # Sign of q^d * f(p/q), q > 0, by homogeneous Horner over the integers (coefficients descending)
    num, den = int(value.p), int(value.q)
    acc = 0
    pow_den = 1
    for c in coeffs:
        acc = acc * num + c * pow_den
        pow_den *= den
    return _sign(acc)


class SturmSequence(object):
    """
    Sturm chain p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i) of a nonzero polynomial, with every
    element scaled to a primitive integer polynomial by a positive factor.
    """

    def __init__(self, p: RationalPoly):
        if p.is_zero():
            raise ZeroPolynomialError("The zero polynomial has no Sturm chain")
        self._source = p
        self._chain = self._build(p.sympy)
        self._coeffs = [_int_coeffs(c) for c in self._chain]
        _LOGGER.debug(f"Sturm chain of a degree {p.degree} polynomial has {len(self._chain)} elements")

    @staticmethod
    def _build(p: Poly) -> List[Poly]:
        chain = [_primitive_zz(p)]
        if p.degree() < 1:
            return chain
        chain.append(_primitive_zz(p.diff(X)))
        while chain[-1].degree() > 0:
            a, b = chain[-2], chain[-1]
            r = a.prem(b)
            if r.is_zero:
                break
            # prem(a, b) = LC(b)^delta * rem(a, b)
            delta = a.degree() - b.degree() + 1
            if b.LC() < 0 and delta % 2 == 1:
                r = -r
            chain.append(_primitive_zz(-r))
        return chain

    @property
    def chain(self) -> List[RationalPoly]:
        return [RationalPoly.from_sympy(c) for c in self._chain]

    def __len__(self) -> int:
        return len(self._chain)

    def sign_at(self, value: ExtendedRational, index: int = 0) -> int:
        coeffs = self._coeffs[index]
        if value == oo:
            return _sign(coeffs[0])
        if value == -oo:
            return _sign(coeffs[0]) * (-1) ** (len(coeffs) - 1)
        return _eval_sign(coeffs, to_rational(value))

    def variations(self, value: ExtendedRational) -> int:
        """
        Sign changes of the chain at a point, zeros dropped.
        """
        signs = [s for s in (self.sign_at(value, i) for i in range(len(self._coeffs))) if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, lo: ExtendedRational, hi: ExtendedRational) -> int:
        """
        Number of distinct real roots in (lo, hi] of a squarefree polynomial.
        """
        return self.variations(lo) - self.variations(hi)

    def is_root(self, value: Rational) -> bool:
        return self.sign_at(value) == 0


def sturm_chain(p: RationalPoly) -> List[RationalPoly]:
    """
    Returns the Sturm chain of p, normalized to primitive integer polynomials (signs preserved).

    :param p: a nonzero polynomial

    :return: [p0, p1, ...] starting with (a positive multiple of) p and p'
    """
    return SturmSequence(p).chain


def _extended(value: ExtendedRational):
    if value is oo or value is -oo:
        return value
    return to_rational(value)


def _perturb(seq: SturmSequence, endpoint: Rational, direction: int, step: Rational) -> Rational:
    # Halve the step until the moved endpoint is a non-root and no root other than the endpoint
    # itself lies between the endpoint and its replacement.
    target = seq.variations(endpoint)
    if direction < 0 and seq.is_root(endpoint):
        target += 1
    while True:
        moved = endpoint + direction * step
        if not seq.is_root(moved) and seq.variations(moved) == target:
            return moved
        step /= 2


def count_real_roots_detailed(p: RationalPoly,
                              lo: ExtendedRational = -oo,
                              hi: ExtendedRational = oo) -> Tuple[int, List[Tuple[Rational, Rational]]]:
    """
    Counts the distinct real roots of p in (lo, hi] and reports the endpoints that had to be moved
    off a root.

    :return: (count, [(endpoint, replacement), ...])
    """
    if p.is_zero():
        raise ZeroPolynomialError("Cannot count the roots of the zero polynomial")
    lo, hi = _extended(lo), _extended(hi)
    if not lo < hi:
        raise ValueError(f"Empty interval ({lo}, {hi}]")

    q = p.squarefree_part()
    if q.is_constant():
        return 0, []
    seq = SturmSequence(q)

    perturbed = []
    width = (hi - lo) / 2 if lo.is_finite and hi.is_finite else Rational(1)
    if lo.is_finite and seq.is_root(lo):
        # The root at lo is outside (lo, hi], move lo inward past it
        moved = _perturb(seq, lo, +1, width)
        _LOGGER.warning(f"Left endpoint {lo} is a root, moved to {moved}")
        perturbed.append((lo, moved))
        lo = moved
    if hi.is_finite and seq.is_root(hi):
        # The root at hi belongs to (lo, hi], move hi outward so that it stays counted
        moved = _perturb(seq, hi, +1, width)
        _LOGGER.warning(f"Right endpoint {hi} is a root, moved to {moved}")
        perturbed.append((hi, moved))
        hi = moved
    return seq.count(lo, hi), perturbed


def count_real_roots_in(p: RationalPoly, lo: ExtendedRational = -oo, hi: ExtendedRational = oo) -> int:
    """
    Number of distinct real roots of p in (lo, hi]; use sympy's oo / -oo for unbounded ends.
    Repeated roots are counted once (the squarefree part is analysed).

    :param p: nonzero polynomial
    :param lo: left end, excluded
    :param hi: right end, included

    :return: the root count
    """
    count, _ = count_real_roots_detailed(p, lo, hi)
    return count


def _split_point(seq: SturmSequence, a: Rational, b: Rational) -> Rational:
    m = (a + b) / 2
    k = 3
    while seq.is_root(m):
        m = a + (b - a) / k
        k += 1
    return m


def _root_bound(p: RationalPoly) -> Rational:
    # Cauchy bound: every root satisfies |z| < 1 + max |a_i / a_d|
    lc = p.leading_coefficient
    return 1 + max(abs(c / lc) for c in p.coefficients[:-1])


def isolate_roots(p: RationalPoly) -> List[RationalInterval]:
    """
    Isolates the real roots of a squarefree polynomial: one interval (lo, hi) per root, sorted,
    pairwise disjoint, with rational endpoints that are not roots.

    :param p: nonzero squarefree polynomial

    :return: list of isolating intervals
    """
    if p.is_zero():
        raise ZeroPolynomialError("Cannot isolate the roots of the zero polynomial")
    if p.is_constant():
        return []
    if not p.is_squarefree():
        raise NotSquarefreeError(f"Root isolation needs a squarefree polynomial, got {p}")
    seq = SturmSequence(p)
    bound = _root_bound(p)

    res = []
    pending = [(-bound, bound)]
    while pending:
        a, b = pending.pop()
        c = seq.count(a, b)
        if c == 0:
            continue
        if c == 1:
            res.append((a, b))
            continue
        m = _split_point(seq, a, b)
        pending.append((m, b))
        pending.append((a, m))
    res.sort()
    _LOGGER.debug(f"Isolated {len(res)} real roots of a degree {p.degree} polynomial")
    return res


def _certify_factor(g: RationalPoly):
    # Sign counts of a squarefree factor. A root at 0 is split off by moving the right end of
    # (-oo, 0] just left of it; the move is kept as certificate metadata.
    seq = SturmSequence(g)
    positive = seq.count(0, oo)
    perturbed = []
    if seq.is_root(Rational(0)):
        left = _perturb(seq, Rational(0), -1, Rational(1))
        perturbed.append((Rational(0), left))
        return seq.count(-oo, left), 1, positive, perturbed
    return seq.count(-oo, 0), 0, positive, perturbed


def certify(p: RationalPoly) -> RootCertificate:
    """
    Builds the full root certificate of p: real root count with multiplicity, squarefreeness,
    root signs and, for squarefree p, isolating intervals.

    Multiplicities come from the squarefree decomposition p = c * prod g_i^i (iterated gcd with
    the derivative); each g_i is squarefree, so its Sturm count is exact.

    :param p: nonzero polynomial

    :return: the certificate
    """
    if p.is_zero():
        raise ZeroPolynomialError("Cannot certify the zero polynomial")

    negative = zero = positive = 0
    squarefree = True
    perturbed = []
    for g, multiplicity in p.squarefree_decomposition():
        if multiplicity > 1:
            squarefree = False
        n, z, s, moved = _certify_factor(g)
        negative += multiplicity * n
        zero += multiplicity * z
        positive += multiplicity * s
        perturbed.extend(moved)

    real_roots = negative + zero + positive
    intervals = isolate_roots(p) if squarefree else None
    cert = RootCertificate(degree=p.degree,
                           real_root_count=real_roots,
                           is_squarefree=squarefree,
                           negative_roots=negative,
                           zero_root_multiplicity=zero,
                           positive_roots=positive,
                           isolating_intervals=intervals,
                           perturbed_endpoints=perturbed)
    _LOGGER.debug(f"Certified {p}: {cert}")
    return cert


def roots_same_sign(cert: RootCertificate) -> bool:
    """
    True when the real roots of a real-rooted polynomial do not mix signs. Roots at zero are neutral.

    :raises NotRealRootedError: on a certificate of a polynomial with non-real roots
    """
    if not cert.is_real_rooted:
        raise NotRealRootedError("Root signs are only meaningful for real-rooted polynomials")
    return cert.negative_roots == 0 or cert.positive_roots == 0


def roots_within(p: RationalPoly, lo: Rational, hi: Rational, closed: bool = True) -> bool:
    """
    True when p is real-rooted and all its roots lie in [lo, hi] (closed) or (lo, hi) (open).
    Nonzero constants trivially qualify.
    """
    lo, hi = to_rational(lo), to_rational(hi)
    if p.is_zero():
        raise ZeroPolynomialError("The zero polynomial has no root location")
    inside = 0
    for g, multiplicity in p.squarefree_decomposition():
        seq = SturmSequence(g)
        c = seq.count(lo, hi)
        if closed and seq.is_root(lo):
            c += 1
        if not closed and seq.is_root(hi):
            c -= 1
        inside += multiplicity * c
    return inside == p.degree


def _refine(p: RationalPoly, interval: Tuple[Rational, Rational]) -> Tuple[Rational, Rational]:
    # Bisection on a sign change; an exact rational root collapses the interval to a point
    lo, hi = interval
    if lo == hi:
        return interval
    m = (lo + hi) / 2
    vm = _sign(p.evaluate(m))
    if vm == 0:
        return m, m
    if _sign(p.evaluate(lo)) * vm < 0:
        return lo, m
    return m, hi


def strictly_interlaces(p: RationalPoly, q: RationalPoly) -> bool:
    """
    True when exactly one root of p lies strictly between every two consecutive roots of q, with
    deg q = deg p + 1. Isolating intervals of both polynomials are refined until they are pairwise
    disjoint, after which the merged root order is checked for alternation.

    :param p: real-rooted squarefree polynomial of degree d
    :param q: real-rooted squarefree polynomial of degree d + 1

    :return: whether the roots of p strictly interlace those of q
    """
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomialError("Interlacing is undefined for the zero polynomial")
    if q.degree != p.degree + 1:
        raise DegreeError(f"Expected deg q = deg p + 1, got {p.degree} and {q.degree}")
    for f in (p, q):
        if not f.is_squarefree():
            raise NotSquarefreeError(f"Interlacing needs squarefree polynomials, got {f}")
        if not certify(f).is_real_rooted:
            raise NotRealRootedError(f"Interlacing needs real-rooted polynomials, got {f}")

    if not p.gcd(q).is_constant():
        _LOGGER.debug("p and q share a root, interlacing is not strict")
        return False

    items = [[iv, 'p'] for iv in isolate_roots(p)] + [[iv, 'q'] for iv in isolate_roots(q)]
    owners = {'p': p, 'q': q}
    while True:
        # Each root lies strictly inside its open interval (or is the collapsed point), so touching
        # ends do not overlap; (lo, hi) ordering puts a point before an interval starting at it
        items.sort(key=lambda it: it[0])
        clash = None
        for i in range(len(items) - 1):
            if items[i][0][1] > items[i + 1][0][0]:
                clash = i
                break
        if clash is None:
            break
        for it in (items[clash], items[clash + 1]):
            it[0] = _refine(owners[it[1]], it[0])

    labels = [it[1] for it in items]
    expected = ['q', 'p'] * p.degree + ['q']
    return labels == expected
