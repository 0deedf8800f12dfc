from typing import List, Union

from sympy import Rational

from stacksort_roots.model.exception import UsageError
from stacksort_roots.utilities.exact import to_rational


def rational_to_str(value: Union[int, Rational]) -> str:
    """
    Canonical exact string form: "p/q" in lowest terms, or just "p" when q = 1.
    """
    r = Rational(value)
    return str(r.p) if r.q == 1 else f"{r.p}/{r.q}"


def str_to_rational(value: str) -> Rational:
    try:
        return to_rational(value.strip())
    except (TypeError, ValueError) as e:
        raise UsageError(f"'{value}' is not an exact rational (expected 'p/q' or an integer)") from e


def parse_int_range(spec: str) -> List[int]:
    """
    Parses an integer range given on the command line. Accepted forms are "a..b" (inclusive),
    "a,b,c" and a single "a"; forms can be mixed, as in "1..3,7".
    """
    values = []
    for chunk in spec.split(','):
        chunk = chunk.strip()
        if chunk == '':
            continue
        try:
            if '..' in chunk:
                lo, hi = chunk.split('..', 1)
                lo, hi = int(lo), int(hi)
                if hi < lo:
                    raise UsageError(f"Empty range '{chunk}'")
                values.extend(range(lo, hi + 1))
            else:
                values.append(int(chunk))
        except ValueError as e:
            raise UsageError(f"Invalid integer range '{spec}'") from e
    if not values:
        raise UsageError(f"Invalid integer range '{spec}'")
    return values


def parse_rational_list(spec: str) -> List[Rational]:
    return [str_to_rational(x) for x in spec.split(',') if x.strip() != '']
