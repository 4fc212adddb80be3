"""Symmetric polynomials in a block of variables, boxed partitions, Reynolds averaging."""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .exact_poly import Polynomial, VarUniverse, permute_variables, sum_polys

Partition = tuple  # weakly decreasing positive parts; () is the empty partition


def as_partition(parts: Sequence[int]) -> Partition:
    p = tuple(int(a) for a in parts if a)
    if any(a < 0 for a in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"{list(parts)} is not a partition")
    return p


def fits_in_box(lam: Partition, d: int, m: int) -> bool:
    return len(lam) <= d and (not lam or lam[0] <= m)


def _indices(universe: VarUniverse, variables) -> tuple:
    return tuple(v if isinstance(v, int) else universe.index(v) for v in variables)


def elementary(r: int, variables, universe: VarUniverse) -> Polynomial:
    """e_r of the listed variables (names or indices)."""
    if r < 0:
        raise ValueError("elementary symmetric polynomial needs r >= 0")
    idx = _indices(universe, variables)
    terms = {}
    for subset in itertools.combinations(idx, r):
        e = [0] * universe.nvars
        for i in subset:
            e[i] = 1
        terms[tuple(e)] = Fraction(1)
    return Polynomial(universe, terms, _trusted=True)


def complete(r: int, variables, universe: VarUniverse) -> Polynomial:
    """h_r of the listed variables; h_r = 0 for r < 0."""
    if r < 0:
        return universe.zero()
    idx = _indices(universe, variables)
    if not idx:
        return universe.one() if r == 0 else universe.zero()
    terms = {}
    for combo in itertools.combinations_with_replacement(idx, r):
        e = [0] * universe.nvars
        for i in combo:
            e[i] += 1
        terms[tuple(e)] = Fraction(1)
    return Polynomial(universe, terms, _trusted=True)


def _det(matrix: list, universe: VarUniverse) -> Polynomial:
    """Laplace expansion along the first row; fine for the small sizes used here."""
    size = len(matrix)
    if size == 0:
        return universe.one()
    if size == 1:
        return matrix[0][0]
    total = universe.zero()
    for j in range(size):
        entry = matrix[0][j]
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * _det(minor, universe)
        total = total + term if j % 2 == 0 else total - term
    return total


def schur(lam: Sequence[int], variables, universe: VarUniverse) -> Polynomial:
    """Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j})."""
    lam = as_partition(lam)
    idx = _indices(universe, variables)
    if len(lam) > len(idx):
        return universe.zero()
    size = len(lam)
    hs = {}

    def h(r):
        if r not in hs:
            hs[r] = complete(r, idx, universe)
        return hs[r]

    matrix = [[h(lam[i] - i + j) for j in range(size)] for i in range(size)]
    return _det(matrix, universe)


def partitions_in_box(d: int, m: int) -> list:
    """Partitions with at most d parts, each at most m, in lexicographic order of padded parts."""
    if d < 0 or m < 0:
        raise ValueError("box dimensions must be nonnegative")
    out = []

    def rec(prefix, cap, remaining):
        if remaining == 0:
            out.append(as_partition(prefix))
            return
        for a in range(0, cap + 1):
            rec(prefix + [a], a, remaining - 1)

    rec([], m, d)
    out.sort(key=lambda p: (sum(p), tuple(p) + (0,) * (d - len(p))))
    return out


def subset_of_partition(lam: Sequence[int], d: int, k: int) -> frozenset:
    """S(lambda) = {lambda_1 + d - 1, lambda_2 + d - 2, ..., lambda_d}."""
    lam = as_partition(lam)
    if not fits_in_box(lam, d, k - d):
        raise ValueError(f"partition {list(lam)} does not fit in a {d}x{k - d} box")
    padded = list(lam) + [0] * (d - len(lam))
    return frozenset(padded[i] + d - 1 - i + 1 for i in range(d))


def partition_of_subset(subset, d: int, k: int) -> Partition:
    s = sorted(subset, reverse=True)
    if len(s) != d or len(set(s)) != d or not all(1 <= a <= k for a in s):
        raise ValueError(f"{subset} is not a {d}-subset of [{k}]")
    return as_partition([s[i] - (d - 1 - i) - 1 for i in range(d)])


@lru_cache(maxsize=None)
def gaussian_binomial(k: int, d: int) -> tuple:
    """q-binomial [k choose d] as a coefficient tuple (index = power of q)."""
    if not 0 <= d <= k:
        raise ValueError("need 0 <= d <= k")
    if d == 0 or d == k:
        return (1,)
    # [k, d] = [k-1, d-1] + q^d [k-1, d]
    a = gaussian_binomial(k - 1, d - 1)
    b = gaussian_binomial(k - 1, d)
    out = [0] * max(len(a), len(b) + d)
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i + d] += c
    return tuple(out)


def box_generating_function(d: int, m: int) -> tuple:
    """Sum of q^|lambda| over partitions in a d x m box, by direct enumeration."""
    counts = [0] * (d * m + 1)
    for lam in partitions_in_box(d, m):
        counts[sum(lam)] += 1
    assert sum(counts) == comb(d + m, d)
    return tuple(counts)


def y_permutations(universe: VarUniverse):
    """Yield index maps realizing every permutation of the y-block."""
    ys = list(universe.y_indices)
    for perm in itertools.permutations(ys):
        yield dict(zip(ys, perm))


def reynolds_y(f: Polynomial) -> Polynomial:
    """Average of f over all permutations of the y-variables."""
    u = f.universe
    if u.d < 1:
        raise ValueError("Reynolds operator needs at least one y-variable")
    images = [permute_variables(f, p) for p in y_permutations(u)]
    return sum_polys(u, images).scale(Fraction(1, factorial(u.d)))


def is_y_symmetric(f: Polynomial) -> bool:
    u = f.universe
    n, d = u.n, u.d
    for i in range(d - 1):
        swap = {n + i: n + i + 1, n + i + 1: n + i}
        if permute_variables(f, swap) != f:
            return False
    return True
