"""Words, staircases, pattern matrices, convexification and permutation helpers."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial
from typing import Sequence

STAR = "*"


@lru_cache(maxsize=None)
def stirling2(n: int, d: int) -> int:
    if n < 0 or d < 0:
        return 0
    if n == 0 and d == 0:
        return 1
    if n == 0 or d == 0:
        return 0
    return d * stirling2(n - 1, d) + stirling2(n - 1, d - 1)


def falling(k: int, d: int) -> int:
    """k!/(k-d)!"""
    if d > k:
        return 0
    return factorial(k) // factorial(k - d)


@dataclass(frozen=True)
class Word:
    """A function [n] -> [k] stored as its 1-based value sequence."""
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(a) for a in self.values))
        if any(a < 1 for a in self.values):
            raise ValueError(f"word letters must be positive: {list(self.values)}")

    @classmethod
    def parse(cls, text: str) -> "Word":
        try:
            return cls(tuple(int(a) for a in text.replace(" ", "").split(",") if a))
        except ValueError:
            raise ValueError(f"cannot parse word {text!r}; expected e.g. 4,4,1,4,2,2") from None

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __str__(self):
        return ",".join(map(str, self.values))

    @property
    def n(self) -> int:
        return len(self.values)

    @cached_property
    def support(self) -> frozenset:
        return frozenset(self.values)

    @property
    def image_size(self) -> int:
        return len(self.support)

    @cached_property
    def initial_positions(self) -> frozenset:
        """1-based positions holding the first occurrence of their letter."""
        seen = set()
        out = []
        for j, a in enumerate(self.values, start=1):
            if a not in seen:
                seen.add(a)
                out.append(j)
        return frozenset(out)

    def first_occurrence(self, letter: int) -> int | None:
        try:
            return self.values.index(letter) + 1
        except ValueError:
            return None

    def is_fubini(self, k: int | None = None) -> bool:
        k = max(self.values, default=0) if k is None else k
        return self.support == frozenset(range(1, k + 1))

    def is_convex(self) -> bool:
        """No subword of the form i ... j ... i with i != j."""
        seen = set()
        prev = None
        for a in self.values:
            if a != prev:
                if a in seen:
                    return False
                seen.add(a)
                prev = a
        return True


def initial_positions(w: Word) -> frozenset:
    return w.initial_positions


def words(n: int, k: int, d: int) -> list:
    """Words of length n over [k] with image size exactly d, in lexicographic order."""
    return [Word(v) for v in itertools.product(range(1, k + 1), repeat=n) if len(set(v)) == d]


def fubini_words(n: int, k: int) -> list:
    return words(n, k, k)


def staircases(n: int, d: int) -> list:
    """Shuffles of (0, 1, ..., d-1) with n-d copies of d-1, deduplicated and sorted."""
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    out = set()
    for slots in itertools.combinations(range(n), d):
        seq = [d - 1] * n
        for value, pos in enumerate(slots):
            seq[pos] = value
        out.add(tuple(seq))
    return sorted(out)


def substaircase_sequences(n: int, d: int) -> list:
    """Sequences componentwise <= some (n,d)-staircase."""
    out = set()
    for st in staircases(n, d):
        out.update(itertools.product(*(range(a + 1) for a in st)))
    return sorted(out, key=lambda a: (sum(a), a))


@dataclass(frozen=True)
class PatternMatrix:
    rows: tuple  # k rows, each a tuple over {0, 1, STAR}

    def __str__(self):
        return "\n".join(" ".join(str(e) for e in row) for row in self.rows)

    @property
    def stars(self) -> list:
        """1-based (row, column) positions of stars."""
        return [(i + 1, j + 1) for i, row in enumerate(self.rows) for j, e in enumerate(row) if e == STAR]

    def to_json(self) -> list:
        return [[e if e == STAR else int(e) for e in row] for row in self.rows]


def pattern_matrix(w: Word, k: int | None = None) -> PatternMatrix:
    k = max(w.values) if k is None else k
    if max(w.values) > k:
        raise ValueError(f"word {w} has letters above k={k}")
    init = w.initial_positions
    first = {a: w.first_occurrence(a) for a in w.support}
    rows = []
    for i in range(1, k + 1):
        row = []
        for j, a in enumerate(w.values, start=1):
            if a == i:
                row.append(1)
            elif j in init:
                earlier = i in w.values[: j - 1]
                row.append(STAR if a > i and earlier else 0)
            else:
                fi = first.get(i)
                row.append(STAR if fi is not None and fi < first[a] else 0)
        rows.append(tuple(row))
    return PatternMatrix(tuple(rows))


def relabel(w: Word) -> Word:
    ranks = {a: r for r, a in enumerate(sorted(w.support), start=1)}
    return Word(tuple(ranks[a] for a in w.values))


# -- permutations --------------------------------------------------------
# one-line notation, 1-based: p[i-1] = p(i)

def perm_length(p: Sequence[int]) -> int:
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def perm_inverse(p: Sequence[int]) -> tuple:
    out = [0] * len(p)
    for i, a in enumerate(p, start=1):
        out[a - 1] = i
    return tuple(out)


def perm_compose(p: Sequence[int], q: Sequence[int]) -> tuple:
    """(p o q)(i) = p(q(i))."""
    return tuple(p[a - 1] for a in q)


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def descents(p: Sequence[int]) -> list:
    return [i for i in range(1, len(p)) if p[i - 1] > p[i]]


def longest_element(n: int) -> tuple:
    return tuple(range(n, 0, -1))


def convexify(w: Word) -> tuple:
    """Return (conv(w), sigma) with conv(w)(i) = w(sigma(i)).

    conv(w) groups equal letters in order of first occurrence; sigma lists the
    positions of w read in that grouped order, which is the stable sort and so
    has the fewest inversions among all permutations doing the job.
    """
    order = sorted(w.support, key=w.first_occurrence)
    sigma = []
    for a in order:
        sigma.extend(j for j, b in enumerate(w.values, start=1) if b == a)
    conv = Word(tuple(w.values[j - 1] for j in sigma))
    return conv, tuple(sigma)


def standardize_convex(w: Word, k: int) -> tuple:
    """Replace non-initial letters by k+1, k+2, ... from left to right."""
    if not w.is_convex():
        raise ValueError(f"word {w} is not convex")
    if not w.is_fubini(k):
        raise ValueError(f"word {w} is not a surjection onto [{k}]")
    init = w.initial_positions
    nxt = k
    out = []
    for j, a in enumerate(w.values, start=1):
        if j in init:
            out.append(a)
        else:
            nxt += 1
            out.append(nxt)
    return tuple(out)
