from __future__ import annotations

import itertools
import logging
from typing import Iterable, Iterator, Optional, Tuple

from stacksort_roots.model.exception import EnumerationLimitError, InvalidPermutationError, InvalidWordError
from stacksort_roots.utilities.config import resolve_max_n

_LOGGER = logging.getLogger(__name__)

Letters = Tuple[int, ...]


class Word(object):
    """
    A finite word over the natural numbers (0 included) without repeated letters.
    The empty word is a valid word.
    """
    def __init__(self, letters: Iterable[int] = ()):
        letters = tuple(letters)
        for l in letters:
            if not isinstance(l, int) or isinstance(l, bool) or l < 0:
                raise InvalidWordError(f"Word letters must be natural numbers, got {l!r}")
        if len(set(letters)) != len(letters):
            raise InvalidWordError(f"Word letters must be pairwise distinct: {letters}")
        self._letters = letters

    @classmethod
    def parse(cls, text: str) -> Word:
        """
        Builds a word from a whitespace separated list of letters, e.g. "2 3 1".
        """
        try:
            return cls(int(x) for x in text.split())
        except ValueError as e:
            if isinstance(e, InvalidWordError):
                raise
            raise InvalidWordError(f"Cannot parse word {text!r}") from e

    @property
    def letters(self) -> Letters:
        return self._letters

    def __len__(self) -> int:
        return len(self._letters)

    def __iter__(self):
        return iter(self._letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self._letters == other._letters

    def __hash__(self) -> int:
        return hash(self._letters)

    def is_increasing(self) -> bool:
        return all(a < b for a, b in zip(self._letters, self._letters[1:]))

    def __str__(self) -> str:
        return " ".join(str(l) for l in self._letters)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({list(self._letters)})"


class Permutation(Word):
    """
    A word whose letters are exactly 1..n, n being its length.
    """
    def __init__(self, letters: Iterable[int] = ()):
        super().__init__(letters)
        if sorted(self._letters) != list(range(1, len(self._letters) + 1)):
            raise InvalidPermutationError(f"Letters {self._letters} are not a permutation of 1..{len(self._letters)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self._letters)

    def is_identity(self) -> bool:
        return self.is_increasing()


def _stack_sort_letters(letters: Letters) -> Letters:
    # s(LnR) = s(L)s(R)n, unfolded on an explicit work stack: a tuple is a segment still to sort,
    # an int is a letter ready to be emitted
    out = []
    work = [letters]
    while work:
        item = work.pop()
        if isinstance(item, int):
            out.append(item)
            continue
        if not item:
            continue
        i = item.index(max(item))
        work.append(item[i])
        work.append(item[i + 1:])
        work.append(item[:i])
    return tuple(out)


def _is_sorted(letters: Letters) -> bool:
    return all(a < b for a, b in zip(letters, letters[1:]))


def descents_of(letters: Letters) -> int:
    return sum(1 for a, b in zip(letters, letters[1:]) if a > b)


def sorts_within(letters: Letters, t: int) -> bool:
    # s maps an increasing word to itself, so it is enough to stop at the first sorted image
    for _ in range(t):
        if _is_sorted(letters):
            return True
        letters = _stack_sort_letters(letters)
    return _is_sorted(letters)


def stack_sort(w: Word) -> Word:
    """
    Applies the stack-sorting operator once. The empty word is mapped to itself, otherwise
    w = LnR (n the largest letter) is mapped to s(L)s(R)n.

    :param w: any valid word

    :return: s(w), of the same class as w
    """
    return w.__class__(_stack_sort_letters(w.letters))


def stack_sort_iterates(w: Word, times: int) -> Iterator[Word]:
    """
    Yields s(w), s^2(w), ..., s^times(w).
    """
    for _ in range(times):
        w = stack_sort(w)
        yield w


def descent_count(p: Permutation) -> int:
    """
    Number of positions i with p(i) > p(i+1).
    """
    return descents_of(p.letters)


def is_t_stack_sortable(p: Permutation, t: int) -> bool:
    """
    True when s^t(p) is the identity permutation.

    :param p: the permutation to check
    :param t: number of passes through the stack, at least 1

    :return: whether p is t-stack sortable
    """
    if t < 1:
        raise ValueError(f"The number of passes must be positive, got {t}")
    return sorts_within(p.letters, t)


def check_enumeration(n: int, max_n: Optional[int]) -> None:
    limit = resolve_max_n(max_n)
    if n < 1:
        raise ValueError(f"Permutation length must be positive, got {n}")
    if n > limit:
        _LOGGER.error(f"Enumeration of S_{n} requested, but the cap is {limit}.")
        raise EnumerationLimitError(n=n, limit=limit)


def partition_letters(n: int, first_letter: int) -> Iterator[Letters]:
    rest = [l for l in range(1, n + 1) if l != first_letter]
    for tail in itertools.permutations(rest):
        yield (first_letter,) + tail


def enumerate_permutations(n: int, max_n: Optional[int] = None) -> Iterator[Permutation]:
    """
    Yields every permutation of S_n exactly once, in lexicographic order.

    :param n: permutation length, 1 <= n <= the enumeration cap
    :param max_n: overrides the enumeration cap (see `resolve_max_n`)

    :return: an iterator over the n! permutations
    """
    check_enumeration(n, max_n)
    for letters in itertools.permutations(range(1, n + 1)):
        yield Permutation(letters)


def enumerate_partition(n: int, first_letter: int, max_n: Optional[int] = None) -> Iterator[Permutation]:
    """
    Yields the (n-1)! permutations of S_n starting with `first_letter`, lexicographically.
    The n partitions together are exactly S_n, which is what parallel tabulation relies on.
    """
    check_enumeration(n, max_n)
    if not 1 <= first_letter <= n:
        raise ValueError(f"First letter {first_letter} is not in 1..{n}")
    for letters in partition_letters(n, first_letter):
        yield Permutation(letters)
