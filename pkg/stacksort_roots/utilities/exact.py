"""
Exact scalar functions shared by every other module. All values are sympy integers/rationals,
which are always kept in lowest terms with a positive denominator.
"""
from typing import Union

from sympy import Integer, Rational, factorial as _factorial, ff, rf

from stacksort_roots.model.exception import NonIntegralValueError, ParameterError
from stacksort_roots.model.typing import RationalLike


def to_rational(value: Union[RationalLike, float]) -> Rational:
    """
    Converts ints, "p/q" strings and sympy numbers to a sympy Rational. Floats are refused,
    as they would silently carry a binary approximation into the exact pipeline.

    :param value: the value to convert

    :return: the exact rational value
    """
    if isinstance(value, float):
        raise ParameterError(f"Refusing floating point value {value}: pass an int, a 'p/q' string or a Rational.")
    if isinstance(value, bool):
        raise ParameterError("Booleans are not rational scalars.")
    r = Rational(value)
    if not r.is_Rational:
        raise ParameterError(f"Value {value} is not a rational number.")
    return r


def _check_order(k: int, what: str) -> int:
    if not isinstance(k, (int, Integer)) or isinstance(k, bool) or k < 0:
        raise ParameterError(f"{what} must be a nonnegative integer, got {k!r}")
    return int(k)


def factorial(n: int) -> int:
    """
    Returns n! as a python integer.

    :param n: a nonnegative integer

    :return: n!
    """
    n = _check_order(n, "factorial argument")
    return int(_factorial(n))


def falling_factorial(a: RationalLike, k: int) -> Rational:
    """
    a(a-1)...(a-k+1), with the empty product equal to 1.
    """
    k = _check_order(k, "falling factorial length")
    return Rational(ff(to_rational(a), k))


def pochhammer(a: RationalLike, n: int) -> Rational:
    """
    Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.

    :param a: any rational
    :param n: nonnegative integer

    :return: the exact rising factorial
    """
    n = _check_order(n, "Pochhammer length")
    return Rational(rf(to_rational(a), n))


def binomial(a: RationalLike, k: int) -> Rational:
    """
    Generalized binomial coefficient a(a-1)...(a-k+1)/k!. The upper argument may be any rational
    (negative and non-integer values included), which is what binom(-n-r, k) needs.

    :param a: upper argument, any rational
    :param k: lower argument, nonnegative integer

    :return: the exact coefficient
    """
    k = _check_order(k, "binomial lower argument")
    return falling_factorial(a, k) / _factorial(k)


def as_integer(value: RationalLike) -> int:
    """
    Integrality assertion: returns the value as an int when its reduced denominator is 1.

    :raises NonIntegralValueError: when the denominator does not reduce to 1
    """
    r = to_rational(value)
    if r.q != 1:
        raise NonIntegralValueError(r)
    return int(r.p)


def catalan(n: int) -> int:
    """
    n-th Catalan number, binom(2n, n)/(n+1).
    """
    n = _check_order(n, "Catalan index")
    return as_integer(binomial(2 * n, n) / (n + 1))
