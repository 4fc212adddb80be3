"""Double Schubert polynomials and representatives of cell closures when d = k."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .combin import (
    Word, convexify, descents, fubini_words, is_permutation, longest_element, perm_inverse,
    perm_length, standardize_convex, substaircase_sequences,
)
from .exact_poly import LEX, Polynomial, VarUniverse, evaluate, permute_variables, substitute
from .gkm import seeded_point
from .linalg import det
from .presentations import Report, _Timer, ideal_Ink
from .groebner import buchberger, standard_monomials

VARIANTS = ("sigma", "sigma_inv")
DEFAULT_VARIANT = "sigma"


def schubert_universe(n: int) -> VarUniverse:
    return VarUniverse(n, 0, n)


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """(f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial."""
    u = f.universe
    a_idx, b_idx = u.xi(i), u.xi(i + 1)
    out: dict = {}
    for m, c in f.terms.items():
        a, b = m[a_idx], m[b_idx]
        if a == b:
            continue
        lo, hi, sign = (b, a, 1) if a > b else (a, b, -1)
        # x_i^a x_{i+1}^b - x_i^b x_{i+1}^a over (x_i - x_{i+1}) = sum_{j} x_i^{hi-1-j} x_{i+1}^{lo+j}
        base = list(m)
        for j in range(hi - lo):
            e = base[:]
            if sign == 1:
                e[a_idx], e[b_idx] = hi - 1 - j, lo + j
            else:
                e[a_idx], e[b_idx] = lo + j, hi - 1 - j
            key = tuple(e)
            out[key] = out.get(key, 0) + sign * c
    return Polynomial(u, {m: c for m, c in out.items() if c}, _trusted=True)


def top_double_schubert(n: int) -> Polynomial:
    u = schubert_universe(n)
    acc = u.one()
    for i in range(1, n + 1):
        for j in range(1, n + 1 - i):
            acc = acc * (u.var(u.xi(i)) - u.var(u.ti(j)))
    return acc


def _swap(p: Sequence[int], i: int) -> tuple:
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


@lru_cache(maxsize=None)
def _double_schubert(perm: tuple, choice: str) -> Polynomial:
    n = len(perm)
    if perm == longest_element(n):
        return top_double_schubert(n)
    ascents = [i for i in range(1, n) if perm[i - 1] < perm[i]]
    i = ascents[0] if choice == "first" else ascents[-1]
    return divided_difference(_double_schubert(_swap(perm, i), choice), i)


def _transpose(p: tuple, i: int, j: int) -> tuple:
    q = list(p)
    q[i - 1], q[j - 1] = q[j - 1], q[i - 1]
    return tuple(q)


@lru_cache(maxsize=None)
def _transition(perm: tuple) -> Polynomial:
    """Double transition recursion; never forms the top product.

    With r the last descent, s the last position after r holding a smaller
    value and v = w t_{rs}:
    S_w = (x_r - t_{v(r)}) S_v + sum over i < r with l(v t_{ir}) = l(v) + 1 of S_{v t_{ir}}.
    """
    n = len(perm)
    u = schubert_universe(n)
    desc = descents(perm)
    if not desc:
        return u.one()
    r = desc[-1]
    s = max(j for j in range(r + 1, n + 1) if perm[j - 1] < perm[r - 1])
    v = _transpose(perm, r, s)
    acc = (u.var(u.xi(r)) - u.var(u.ti(v[r - 1]))) * _transition(v)
    lv = perm_length(v)
    for i in range(1, r):
        cand = _transpose(v, i, r)
        if perm_length(cand) == lv + 1:
            acc = acc + _transition(cand)
    return acc


@dataclass(frozen=True)
class DoubleSchubert:
    perm: tuple
    poly: Polynomial


TRANSITION_THRESHOLD = 7  # the top product has 2^(n(n-1)/2) terms; switch routes from here on


def double_schubert(perm: Sequence[int], choice: str = "first", method: str = "auto") -> DoubleSchubert:
    """S_v from S_{w0} = prod_{i+j<=n} (x_i - t_j) by S_v = d_i S_{v s_i} for ascents i of v.

    `choice` picks the first or last ascent at each step, giving two different
    reduced-word paths (used to check path independence). method "transition"
    uses the transition recursion instead, which stays small for large n;
    "auto" picks it when n >= TRANSITION_THRESHOLD.
    """
    perm = tuple(perm)
    if not is_permutation(perm):
        raise ValueError(f"{list(perm)} is not a permutation")
    if method == "auto":
        method = "transition" if len(perm) >= TRANSITION_THRESHOLD else "divided"
    if method == "divided":
        return DoubleSchubert(perm, _double_schubert(perm, choice))
    if method == "transition":
        return DoubleSchubert(perm, _transition(perm))
    raise ValueError(f"unknown method {method!r}")


def negate_x(f: Polynomial) -> Polynomial:
    u = f.universe
    return Polynomial(u, {m: (-c if sum(m[: u.n]) % 2 else c) for m, c in f.terms.items()}, _trusted=True)


def negate_t(f: Polynomial) -> Polynomial:
    u = f.universe
    return Polynomial(u, {m: (-c if sum(m[u.n + u.d:]) % 2 else c) for m, c in f.terms.items()}, _trusted=True)


def cell_representative(w: Word, n: int, k: int, variant: str = DEFAULT_VARIANT,
                        flip_t: bool = False) -> Polynomial:
    """sigma(w)^{-1} acting on S_{std(conv w)}(-x | t), as a polynomial in x_1..x_n, t_1..t_k.

    variant "sigma" substitutes x_i -> x_{sigma(i)}; "sigma_inv" substitutes x_i -> x_{sigma^{-1}(i)}.
    flip_t additionally sends t_j -> -t_j.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; choose from {VARIANTS}")
    if len(w) != n:
        raise ValueError(f"word length {len(w)} differs from n={n}")
    if not w.is_fubini(k):
        raise ValueError("representative formula known only for d = k")
    conv, sigma = convexify(w)
    std = standardize_convex(conv, k)
    big = negate_x(double_schubert(std).poly)
    u_big = big.universe
    for m in big.terms:
        if any(m[u_big.ti(j)] for j in range(k + 1, n + 1)):
            raise AssertionError(f"t-variable beyond t_{k} in representative of {w}")
    target = VarUniverse(n, 0, k)
    small = Polynomial(target, {m[: n + k]: c for m, c in big.terms.items()}, _trusted=True)
    if variant == "sigma":
        images = sigma
    else:
        images = perm_inverse(sigma)
    rep = permute_variables(small, {i: images[i] - 1 for i in range(n)})
    return negate_t(rep) if flip_t else rep


@lru_cache(maxsize=None)
def ink_groebner(n: int, k: int):
    return buchberger(list(ideal_Ink(n, k).generators), LEX)


def representative_matrix(n: int, k: int, variant: str = DEFAULT_VARIANT, flip_t: bool = False) -> tuple:
    """(words, standard x-monomials, matrix of t-polynomial coordinates of NF(rep_w))."""
    gb = ink_groebner(n, k)
    u = gb.universe
    std = standard_monomials(gb, list(u.x_indices))
    index = {m[:n]: i for i, m in enumerate(std)}
    ws = fubini_words(n, k)
    tu = VarUniverse(0, 0, k)
    rows = []
    for w in ws:
        nf = gb.normal_form(cell_representative(w, n, k, variant, flip_t))
        row = [dict() for _ in std]
        for m, c in nf.terms.items():
            row[index[m[:n]]][m[n:]] = c
        rows.append([Polynomial(tu, r, _trusted=True) for r in row])
    return ws, std, rows


def verify_representatives(n: int, k: int, variant: str = DEFAULT_VARIANT, seed: int = 17,
                           flip_t: bool = False) -> Report:
    """Representatives reduce to a Q[t]-basis of Q[x,t]/I_{n,k}.

    The determinant of the coordinate matrix is homogeneous of degree
    sum(deg rep) - sum(deg std monomial); when that is 0 and the value at a
    point is nonzero, the determinant is a nonzero constant, i.e. a unit.
    """
    with _Timer() as tm:
        ws, std, rows = representative_matrix(n, k, variant, flip_t)
        square = len(ws) == len(std)
        rep_degrees = [perm_length(standardize_convex(convexify(w)[0], k)) for w in ws]
        det_degree = sum(rep_degrees) - sum(sum(m) for m in std)
        values = []
        for s in (seed, seed + 1):
            pt = dict(enumerate(seeded_point(k, s)))
            values.append(det([[evaluate(e, pt) for e in row] for row in rows]) if square else Fraction(0))
        nonzero = any(v != 0 for v in values)
        unit = det_degree == 0 and nonzero and values[0] == values[1]
        substaircase = sorted(m[:n] for m in std) == sorted(substaircase_sequences(n, k))
    return Report("schubert-basis", n, k, k, square and nonzero and unit and substaircase,
                  {"variant": variant, "flip_t": flip_t, "size": len(ws), "std_monomials": len(std),
                   "determinant_values": [str(v) for v in values], "determinant_degree": det_degree,
                   "unit_determinant": unit, "std_is_substaircase": substaircase}, tm.ms)


def localization_profile(n: int, k: int, variant: str = DEFAULT_VARIANT, flip_t: bool = False) -> dict:
    """Which fixed points each representative restricts nontrivially to (x_i -> t_{u(i)}).

    Reported as a diagnostic: a cell-closure class restricts to zero outside
    its closure, so the support relation should be acyclic with nonzero diagonal.
    """
    ws = fubini_words(n, k)
    u = VarUniverse(n, 0, k)
    support = {}
    for w in ws:
        rep = cell_representative(w, n, k, variant, flip_t)
        nonzero = []
        for v in ws:
            subst = {u.xi(i): u.var(u.ti(v[i - 1])) for i in range(1, n + 1)}
            if not substitute(rep, subst).is_zero():
                nonzero.append(v)
        support[w] = nonzero
    diagonal = all(w in support[w] for w in ws)
    # acyclic iff repeatedly removing a word supported nowhere else empties the set
    remaining = set(ws)
    progress = True
    while remaining and progress:
        progress = False
        for w in sorted(remaining, key=lambda a: a.values):
            if not any(w in support[v] for v in remaining if v != w):
                remaining.discard(w)
                progress = True
    return {"diagonal_nonzero": diagonal, "acyclic": not remaining,
            "support_sizes": {str(w): len(s) for w, s in support.items()}}
