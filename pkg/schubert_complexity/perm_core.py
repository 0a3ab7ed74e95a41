"""
Permutation core for Schubert Complexity.

Permutations of [n] in one-line notation with everything the rest of the
package builds on:
- parsing ("45231" or "4,5,2,3,1") and rendering
- products, inverses, left/right multiplication by transpositions
- the rank function r_w(a, b) and Coxeter length
- pattern containment and lexicographic enumeration of S_n

Indices are 1-based throughout. The permutation matrix of w has its 1s at
(w(i), i), so r_w(a, b) counts the 1s in rows a..n and columns 1..b.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Sequence, Tuple

from schubert_complexity.exceptions import (
    ConsistencyError,
    PermutationParseError,
    ShapeError,
    SizeMismatchError,
)

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] stored as its one-line word w(1)...w(n)."""

    word: Tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(int(x) for x in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ShapeError(f"{list(word)} is not a permutation of 1..{len(word)}")
        object.__setattr__(self, "word", word)

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(x) for x in self.word)
        return ",".join(str(x) for x in self.word)

    def __repr__(self) -> str:
        return f"Permutation('{self}')"

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    @cached_property
    def inverse_word(self) -> Tuple[int, ...]:
        inv = [0] * self.n
        for i, value in enumerate(self.word, start=1):
            inv[value - 1] = i
        return tuple(inv)

    def inverse(self) -> "Permutation":
        return Permutation(self.inverse_word)

    def right_multiply(self, i: int, j: int) -> "Permutation":
        """w * t_{i,j}: swap the entries in positions i and j."""
        word = list(self.word)
        word[i - 1], word[j - 1] = word[j - 1], word[i - 1]
        return Permutation(tuple(word))

    def left_multiply(self, a: int, b: int) -> "Permutation":
        """t_{a,b} * w: swap the values a and b."""
        swap = {a: b, b: a}
        return Permutation(tuple(swap.get(x, x) for x in self.word))

    def rank(self, a: int, b: int) -> int:
        return rank(self, a, b)

    @cached_property
    def length(self) -> int:
        return inversions(self)

    def matrix(self) -> List[List[int]]:
        """Permutation matrix as rows; row r holds the 1 of column i when w(i) = r."""
        rows = [[0] * self.n for _ in range(self.n)]
        for i, value in enumerate(self.word, start=1):
            rows[value - 1][i - 1] = 1
        return rows


def parse(text: str) -> Permutation:
    """
    Parse one-line notation.

    Args:
        text: "45231" (digits, n <= 9) or "4,5,2,3,1" (any n)

    Returns:
        The permutation

    Raises:
        PermutationParseError: with the 1-based position of the first bad entry
    """
    raw = text.strip()
    if not raw:
        raise PermutationParseError(text, 1, "empty input")
    tokens = [t.strip() for t in raw.split(",")] if "," in raw else list(raw)
    values: List[int] = []
    for position, token in enumerate(tokens, start=1):
        if not token.isdigit():
            raise PermutationParseError(text, position, f"'{token}' is not a positive integer")
        values.append(int(token))
    n = len(values)
    seen = set()
    for position, value in enumerate(values, start=1):
        if value < 1 or value > n:
            raise PermutationParseError(text, position, f"{value} is outside 1..{n}")
        if value in seen:
            raise PermutationParseError(text, position, f"{value} appears twice")
        seen.add(value)
    return Permutation(tuple(values))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest(n: int) -> Permutation:
    """The longest element w0 = n ... 1."""
    return Permutation(tuple(range(n, 0, -1)))


def transposition(i: int, j: int, n: int) -> Permutation:
    return identity(n).right_multiply(i, j)


def simple(i: int, n: int) -> Permutation:
    """The simple reflection s_i = t_{i,i+1}."""
    return transposition(i, i + 1, n)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """(a o b)(i) = a(b(i))."""
    if a.n != b.n:
        raise SizeMismatchError(f"cannot compose S_{a.n} with S_{b.n}")
    return Permutation(tuple(a(b(i)) for i in range(1, a.n + 1)))


def product(factors: Iterable[Permutation], n: int) -> Permutation:
    result = identity(n)
    for factor in factors:
        result = compose(result, factor)
    return result


def rank(w: Permutation, a: int, b: int) -> int:
    """r_w(a, b) = #{i <= b : w(i) >= a}."""
    if not (1 <= a <= w.n and 1 <= b <= w.n):
        raise ShapeError(f"({a}, {b}) is outside the {w.n}x{w.n} grid")
    return sum(1 for i in range(b) if w.word[i] >= a)


def rank_table(w: Permutation) -> List[List[int]]:
    """All r_w(a, b), indexed [a-1][b-1]."""
    n = w.n
    table = [[0] * n for _ in range(n)]
    for a in range(n, 0, -1):
        running = 0
        for b in range(1, n + 1):
            if w(b) >= a:
                running += 1
            table[a - 1][b - 1] = running
    return table


def inversions(w: Permutation) -> int:
    word = w.word
    return sum(
        1 for i in range(w.n) for j in range(i + 1, w.n) if word[i] > word[j]
    )


def diagram_size(w: Permutation) -> int:
    """|D°(w)| = #{(i, j) : w(j) < i, w^-1(i) > j}."""
    inv = w.inverse_word
    return sum(
        1
        for i in range(1, w.n + 1)
        for j in range(1, w.n + 1)
        if w(j) < i and inv[i - 1] > j
    )


def coxeter_length(w: Permutation) -> Tuple[int, int]:
    """
    Length of w by two independent witnesses.

    Returns:
        (inversion count, n(n-1)/2 - |D°(w)|), which always agree

    Raises:
        ConsistencyError: if the two witnesses differ
    """
    by_inversions = inversions(w)
    by_diagram = w.n * (w.n - 1) // 2 - diagram_size(w)
    if by_inversions != by_diagram:
        logger.error(f"Length witnesses disagree for {w}: {by_inversions} vs {by_diagram}")
        raise ConsistencyError(f"length of {w}: {by_inversions} != {by_diagram}")
    return by_inversions, by_diagram


def standardize(values: Sequence[int]) -> Tuple[int, ...]:
    """Replace values by their relative ranks 1..k."""
    order = sorted(values)
    return tuple(order.index(x) + 1 for x in values)


def contains_pattern(w: Permutation, p: Permutation) -> bool:
    """True iff some subsequence of w is order-isomorphic to p."""
    if p.n > w.n:
        return False
    target = p.word
    return any(
        standardize(sub) == target for sub in itertools.combinations(w.word, p.n)
    )


def avoids(w: Permutation, *patterns: Permutation) -> bool:
    return not any(contains_pattern(w, p) for p in patterns)


def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order."""
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


def lex_rank(w: Permutation) -> int:
    """Position of w in the lexicographic order of S_n, starting at 0."""
    remaining = list(range(1, w.n + 1))
    position = 0
    for i, value in enumerate(w.word):
        index = remaining.index(value)
        position += index * math.factorial(w.n - 1 - i)
        remaining.pop(index)
    return position


def lex_unrank(n: int, position: int) -> Permutation:
    remaining = list(range(1, n + 1))
    word = []
    for i in range(n):
        block = math.factorial(n - 1 - i)
        index, position = divmod(position, block)
        word.append(remaining.pop(index))
    return Permutation(tuple(word))


def permutations_between(n: int, start: int, stop: int) -> Iterator[Permutation]:
    """Lexicographic block [start, stop) of S_n."""
    if start >= stop:
        return
    word = list(lex_unrank(n, start).word)
    for _ in range(start, stop):
        yield Permutation(tuple(word))
        # next permutation in lexicographic order
        i = n - 2
        while i >= 0 and word[i] > word[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while word[j] < word[i]:
            j -= 1
        word[i], word[j] = word[j], word[i]
        word[i + 1 :] = reversed(word[i + 1 :])


def reduced_word(w: Permutation) -> List[int]:
    """
    A reduced word i_1 ... i_l with w = s_{i_1} ... s_{i_l}.

    Peels off right descents; the result has length l(w).
    """
    letters: List[int] = []
    current = w
    while True:
        descent = next(
            (i for i in range(1, current.n) if current(i) > current(i + 1)), None
        )
        if descent is None:
            break
        letters.insert(0, descent)
        current = current.right_multiply(descent, descent + 1)
    return letters


TORIC_PATTERNS = (Permutation((4, 3, 1, 2)), Permutation((3, 4, 1, 2)))
