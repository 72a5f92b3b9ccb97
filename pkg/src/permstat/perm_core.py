"""Permutations of {1..n} and the classical statistics defined on them.

A permutation is stored as its one-line word: entry j of the word is the
image of j.  Values and positions are 1-based throughout, which keeps every
formula aligned with the standard combinatorics conventions and avoids
off-by-one translation.

Beyond the familiar statistics (inversions, descents, major index,
excedances, right-to-left minima, cycle count) this module provides the
descent-block machinery (openers, closers, right embracing numbers) that
defines ``mak``, Denert's statistic ``den`` computed by two independent
formulas that are cross-checked on every call, and the cycle-based sorting
index ``sor``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InternalCheckError, InvalidPermutationError

__all__ = [
    "Permutation",
    "StatRecord",
    "DescentBlock",
    "DescentBlockStructure",
    "parse_permutation",
    "all_permutations",
    "basic_statistics",
    "inv",
    "des",
    "maj",
    "exc",
    "rlmin",
    "cyc",
    "descent_positions",
    "right_to_left_minima",
    "cycle_decomposition",
    "restrict",
    "descent_blocks",
    "rem_values",
    "mak",
    "excedance_split",
    "den",
    "sor_c_values",
    "sor",
    "inversion_numbers",
]


@dataclass(frozen=True)
class Permutation:
    """One-line word of a permutation of {1..n}; ``word[j-1]`` is the image of j.

    >>> Permutation((3, 5, 4, 1, 6, 2))(3)
    4
    >>> str(Permutation((2, 1)))
    '21'
    """

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        n = len(word)
        if n == 0:
            raise InvalidPermutationError("empty permutation")
        if sorted(word) != list(range(1, n + 1)):
            raise InvalidPermutationError(
                f"word {word} is not a rearrangement of 1..{n}"
            )

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, j: int) -> int:
        """Image of position j (1-based)."""
        return self.word[j - 1]

    def __str__(self) -> str:
        # Canonical text: digit string for n <= 9, comma-separated beyond.
        if self.n <= 9:
            return "".join(str(v) for v in self.word)
        return ",".join(str(v) for v in self.word)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))


@dataclass(frozen=True)
class StatRecord:
    """The six basic counts attached to one permutation."""

    inv: int
    des: int
    maj: int
    exc: int
    rlmin: int
    cyc: int


@dataclass(frozen=True)
class DescentBlock:
    """A maximal decreasing run: closer is its leftmost (largest) value,
    opener its rightmost (smallest); an outsider is a singleton block."""

    values: tuple[int, ...]
    closer: int
    opener: int
    is_outsider: bool


@dataclass(frozen=True)
class DescentBlockStructure:
    """Ordered maximal decreasing runs whose concatenation is the word."""

    blocks: tuple[DescentBlock, ...]


def parse_permutation(text: str) -> Permutation:
    """Parse a one-line word: a digit string (n <= 9 only) or comma-separated.

    >>> parse_permutation("354162").word
    (3, 5, 4, 1, 6, 2)
    >>> parse_permutation("3,5,4,1,6,2").word
    (3, 5, 4, 1, 6, 2)
    """
    text = text.strip()
    if not text:
        raise InvalidPermutationError("empty input")
    if "," in text:
        values = []
        for token in text.split(","):
            token = token.strip()
            try:
                values.append(int(token))
            except ValueError:
                raise InvalidPermutationError(f"malformed token {token!r}") from None
    else:
        if not text.isdigit():
            raise InvalidPermutationError(f"malformed token {text!r}")
        values = [int(ch) for ch in text]
    if any(v < 1 for v in values):
        bad = next(v for v in values if v < 1)
        raise InvalidPermutationError(f"value {bad} out of range 1..{len(values)}")
    return Permutation(tuple(values))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line words."""
    if n < 1:
        raise ValueError("n must be >= 1")
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


def inv(p: Permutation) -> int:
    """Number of inversions: pairs j < k with word[j] > word[k].

    >>> inv(Permutation((3, 5, 4, 1, 6, 2)))
    8
    """
    word = p.word
    n = len(word)
    return sum(
        1 for j in range(n) for k in range(j + 1, n) if word[j] > word[k]
    )


def descent_positions(p: Permutation) -> tuple[int, ...]:
    """1-based positions j with word_j > word_{j+1}."""
    word = p.word
    return tuple(j for j in range(1, len(word)) if word[j - 1] > word[j])


def des(p: Permutation) -> int:
    """Number of descents."""
    return len(descent_positions(p))


def maj(p: Permutation) -> int:
    """Major index: the sum of the descent positions.

    >>> maj(Permutation((3, 5, 4, 1, 6, 2)))
    10
    """
    return sum(descent_positions(p))


def exc(p: Permutation) -> int:
    """Number of excedances: positions j with word_j > j."""
    return sum(1 for j, v in enumerate(p.word, start=1) if v > j)


def right_to_left_minima(p: Permutation) -> tuple[int, ...]:
    """Values smaller than everything to their right, in word order."""
    out = []
    cur = p.n + 1
    for v in reversed(p.word):
        if v < cur:
            out.append(v)
            cur = v
    return tuple(reversed(out))


def rlmin(p: Permutation) -> int:
    """Number of right-to-left minima."""
    count = 0
    cur = p.n + 1
    for v in reversed(p.word):
        if v < cur:
            count += 1
            cur = v
    return count


def cycle_decomposition(p: Permutation) -> tuple[tuple[int, ...], ...]:
    """Disjoint cycles covering {1..n}, each starting at its minimum and
    following the orbit j -> word_j; cycles ordered by minimum.

    >>> cycle_decomposition(Permutation((3, 5, 4, 1, 6, 2)))
    ((1, 3, 4), (2, 5, 6))
    """
    word = p.word
    seen = [False] * (p.n + 1)
    cycles = []
    for start in range(1, p.n + 1):
        if seen[start]:
            continue
        cycle = []
        j = start
        while not seen[j]:
            seen[j] = True
            cycle.append(j)
            j = word[j - 1]
        cycles.append(tuple(cycle))
    return tuple(cycles)


def cyc(p: Permutation) -> int:
    """Number of disjoint cycles, fixed points included."""
    word = p.word
    seen = [False] * (p.n + 1)
    count = 0
    for start in range(1, p.n + 1):
        if seen[start]:
            continue
        count += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = word[j - 1]
    return count


def basic_statistics(p: Permutation) -> StatRecord:
    """inv, des, maj, exc, rlmin and cyc of one permutation."""
    return StatRecord(
        inv=inv(p), des=des(p), maj=maj(p), exc=exc(p), rlmin=rlmin(p), cyc=cyc(p)
    )


def restrict(p: Permutation, j: int) -> tuple[int, ...]:
    """Subword of the values 1..j in their original order.

    >>> restrict(Permutation((3, 5, 4, 1, 6, 2)), 3)
    (3, 1, 2)
    """
    if not 1 <= j <= p.n:
        raise ValueError(f"j={j} out of range 1..{p.n}")
    return tuple(v for v in p.word if v <= j)


def descent_blocks(p: Permutation) -> DescentBlockStructure:
    """Split the word into maximal decreasing runs."""
    word = p.word
    blocks = []
    start = 0
    for i in range(1, p.n + 1):
        if i == p.n or word[i - 1] < word[i]:
            values = word[start:i]
            blocks.append(
                DescentBlock(
                    values=values,
                    closer=values[0],
                    opener=values[-1],
                    is_outsider=len(values) == 1,
                )
            )
            start = i
    return DescentBlockStructure(blocks=tuple(blocks))


def rem_values(p: Permutation) -> dict[int, int]:
    """Right embracing number of every value: how many blocks strictly to its
    right have opener < value < closer."""
    blocks = descent_blocks(p).blocks
    rem = {}
    for bi, block in enumerate(blocks):
        later = blocks[bi + 1 :]
        for v in block.values:
            rem[v] = sum(1 for b in later if b.opener < v < b.closer)
    return rem


def mak(p: Permutation) -> int:
    """Sum of the descent bottoms plus the total right embracing number.

    >>> mak(Permutation((3, 5, 4, 1, 6, 2)))
    11
    """
    word = p.word
    bottoms = sum(word[j] for j in range(1, p.n) if word[j - 1] > word[j])
    return bottoms + sum(rem_values(p).values())


def excedance_split(p: Permutation) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(excedance tops, non-excedance tops), each in word order."""
    tops = []
    non_tops = []
    for j, v in enumerate(p.word, start=1):
        (tops if v > j else non_tops).append(v)
    return tuple(tops), tuple(non_tops)


def _word_inversions(word: Sequence[int]) -> int:
    n = len(word)
    return sum(1 for j in range(n) for k in range(j + 1, n) if word[j] > word[k])


def _den_from_pairs(word: Sequence[int]) -> int:
    # Classify each pair j < k by how word_j, word_k sit relative to k.
    total = 0
    n = len(word)
    for j in range(n):
        vj = word[j]
        for k in range(j + 1, n):
            vk = word[k]
            pos = k + 1
            if (
                vk < vj <= pos
                or vj <= pos < vk
                or pos < vk < vj
            ):
                total += 1
    return total


def _den_from_excedances(word: Sequence[int]) -> int:
    tops = []
    non_tops = []
    exc_sum = 0
    for j, v in enumerate(word, start=1):
        if v > j:
            tops.append(v)
            exc_sum += j
        else:
            non_tops.append(v)
    return _word_inversions(tops) + _word_inversions(non_tops) + exc_sum


def den(p: Permutation) -> int:
    """Denert's statistic, computed by both of its classical definitions
    (pair classification and excedance-subword form) and cross-checked.

    >>> den(Permutation((3, 5, 4, 1, 6, 2)))
    12
    """
    a = _den_from_pairs(p.word)
    b = _den_from_excedances(p.word)
    if a != b:
        raise InternalCheckError(
            f"den formulas disagree on {p}: pair form {a}, excedance form {b}"
        )
    return a


def sor_c_values(p: Permutation) -> tuple[int, ...]:
    """c_j for each j: j itself when j is the minimum of its cycle, otherwise
    the first value below j in the forward orbit word_j, word_{word_j}, ..."""
    word = p.word
    out = []
    for j in range(1, p.n + 1):
        c = j
        cur = word[j - 1]
        while cur != j:
            if cur < j:
                c = cur
                break
            cur = word[cur - 1]
        out.append(c)
    return tuple(out)


def sor(p: Permutation) -> int:
    """Sorting index: the sum of j - c_j.

    >>> sor(Permutation((3, 5, 4, 1, 6, 2)))
    12
    """
    return sum(j - c for j, c in enumerate(sor_c_values(p), start=1))


def inversion_numbers(
    word: Sequence[int],
) -> tuple[dict[int, int], dict[int, int]]:
    """Per-value inversion counts of a word of distinct integers.

    Returns (bottom, top): bottom[v] counts larger entries left of v, top[v]
    counts smaller entries right of v.
    """
    word = tuple(word)
    if len(set(word)) != len(word):
        raise ValueError(f"word {word} has duplicate entries")
    bottom = {}
    top = {}
    n = len(word)
    for i, v in enumerate(word):
        bottom[v] = sum(1 for u in word[:i] if u > v)
        top[v] = sum(1 for u in word[i + 1 :] if u < v)
    return bottom, top
