from typing import Tuple, Union

from sympy import Rational
from sympy.core.numbers import Infinity, NegativeInfinity

RationalLike = Union[int, str, Rational]
# Interval ends may also be sympy's oo / -oo.
ExtendedRational = Union[RationalLike, Infinity, NegativeInfinity]
RationalInterval = Tuple[Rational, Rational]
