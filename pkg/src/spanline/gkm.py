"""Restriction to torus-fixed points, injectivity, and the divisibility condition on pairs."""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combin import Word, words
from .exact_poly import LEX, Polynomial, VarUniverse, evaluate, substitute
from .groebner import buchberger
from .linalg import det, rank as mat_rank
from .presentations import BasisFamily, InvariantElement, Report, _Timer, basis_C, ideal_I
from .symfun import is_y_symmetric


def t_universe(k: int) -> VarUniverse:
    return VarUniverse(0, 0, k)


def restrict_at_word(f, w: Word, k: int) -> Polynomial:
    """x_i -> t_{w(i)}, y-block -> {t_j : j in im(w)}; valid on y-symmetric input."""
    if isinstance(f, InvariantElement):
        f = f.to_polynomial()
    u = f.universe
    if len(w) != u.n:
        raise ValueError(f"word length {len(w)} does not match n={u.n}")
    if max(w.values) > k:
        raise ValueError(f"word {w} uses letters above k={k}")
    if u.k not in (0, k):
        raise ValueError(f"polynomial has {u.k} t-variables, expected 0 or {k}")
    if len(w.support) != u.d:
        raise ValueError(f"word {w} has image size {len(w.support)}, expected d={u.d}")
    if u.d > 1 and not is_y_symmetric(f):
        raise ValueError("restriction defined only on invariants")
    target = t_universe(k)
    subst = {}
    for i in range(1, u.n + 1):
        subst[u.xi(i)] = target.var(target.ti(w[i - 1]))
    for j, letter in enumerate(sorted(w.support), start=1):
        subst[u.yi(j)] = target.var(target.ti(letter))
    for j in range(1, u.k + 1):
        subst[u.ti(j)] = target.var(target.ti(j))
    return substitute(f, subst, target)


@dataclass
class RestrictionMatrix:
    rows: tuple      # words
    columns: tuple   # basis labels
    entries: list    # entries[row][col] Polynomials in t

    def specialize(self, point: Sequence[Fraction]) -> list:
        pt = dict(enumerate(point))
        return [[evaluate(e, pt) for e in row] for row in self.entries]


def restriction_matrix(n: int, k: int, d: int, basis: BasisFamily | None = None) -> RestrictionMatrix:
    basis = basis or basis_C(n, k, d)
    ws = words(n, k, d)
    entries = [[restrict_at_word(c, w, k) for c in basis.elements] for w in ws]
    return RestrictionMatrix(tuple(ws), basis.labels, entries)


def seeded_point(k: int, seed: int) -> tuple:
    rng = random.Random(seed)
    out: list = []
    while len(out) < k:
        a = Fraction(rng.randint(-97, 97), rng.randint(1, 9))
        if a not in out:
            out.append(a)
    return tuple(out)


def verify_kills_ideal(n: int, k: int, d: int) -> Report:
    with _Timer() as tm:
        gens = ideal_I(n, k, d).generators
        bad = [(str(w), gi) for w in words(n, k, d) for gi, g in enumerate(gens)
               if not restrict_at_word(g, w, k).is_zero()]
    return Report("gkm-kills-ideal", n, k, d, not bad,
                  {"generators": len(gens), "words": len(words(n, k, d)), "nonzero": bad[:10]}, tm.ms)


def verify_injectivity(n: int, k: int, d: int, seed: int = 17) -> Report:
    with _Timer() as tm:
        mat = restriction_matrix(n, k, d)
        square = len(mat.rows) == len(mat.columns)
        tried = []
        value = Fraction(0)
        for s in (seed, seed + 1):
            point = seeded_point(k, s)
            value = det(mat.specialize(point)) if square else Fraction(0)
            tried.append(s)
            if value != 0:
                break
    return Report("gkm-injectivity", n, k, d, square and value != 0,
                  {"size": len(mat.rows), "columns": len(mat.columns), "seeds": tried,
                   "determinant": str(value), "inconclusive": square and value == 0}, tm.ms)


def star_pairs(n: int, k: int, d: int) -> list:
    """Ordered pairs (w1, w2, I, j1, j2): w1 = j1 and w2 = j2 on I, equal off I."""
    out = []
    ws = words(n, k, d)
    for w1, w2 in itertools.product(ws, ws):
        diff = [i for i in range(n) if w1[i] != w2[i]]
        if not diff:
            continue
        j1s = {w1[i] for i in diff}
        j2s = {w2[i] for i in diff}
        if len(j1s) == 1 and len(j2s) == 1:
            out.append((w1, w2, frozenset(i + 1 for i in diff), j1s.pop(), j2s.pop()))
    return out


def divides_by_difference(f: Polynomial, j1: int, j2: int) -> bool:
    """Exact division of f by t_{j1} - t_{j2}: remainder must vanish."""
    u = f.universe
    divisor = u.var(u.ti(j1)) - u.var(u.ti(j2))
    return buchberger([divisor], LEX).normal_form(f).is_zero()


def verify_divisibility(n: int, k: int, d: int) -> Report:
    with _Timer() as tm:
        basis = basis_C(n, k, d)
        pairs = star_pairs(n, k, d)
        cache = {}

        def restricted(ci, w):
            key = (ci, w)
            if key not in cache:
                cache[key] = restrict_at_word(basis.elements[ci], w, k)
            return cache[key]

        gbs = {}
        failures = []
        for w1, w2, I, j1, j2 in pairs:
            key = (min(j1, j2), max(j1, j2))
            if key not in gbs:
                tu = t_universe(k)
                gbs[key] = buchberger([tu.var(tu.ti(j1)) - tu.var(tu.ti(j2))], LEX)
            for ci in range(len(basis)):
                diff = restricted(ci, w1) - restricted(ci, w2)
                if not gbs[key].normal_form(diff).is_zero():
                    failures.append([str(w1), str(w2), ci])
    return Report("gkm-divisibility", n, k, d, not failures,
                  {"pairs": len(pairs), "basis_size": len(basis), "failures": failures[:10]}, tm.ms)


def _t_monomials(k: int, degree: int) -> list:
    out = []
    for combo in itertools.combinations_with_replacement(range(k), degree):
        e = [0] * k
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def exploratory_gkm_dimensions(n: int, k: int, d: int, max_degree: int) -> dict:
    """Per-degree dimension of tuples satisfying every pair condition vs. the image dimension.

    Reported only; nothing is asserted. The image dimension in degree D is
    sum_i h_i * dim Q[t]_{D-i}, with h the graded rank of the C basis.
    """
    from math import comb

    ws = words(n, k, d)
    pairs = star_pairs(n, k, d)
    basis = basis_C(n, k, d)
    h: dict = {}
    for c in basis.elements:
        h[c.degree()] = h.get(c.degree(), 0) + 1
    out = {}
    for D in range(max_degree + 1):
        monos = _t_monomials(k, D)
        nvars = len(ws) * len(monos)
        rows = []
        for w1, w2, I, j1, j2 in pairs:
            a, b = ws.index(w1), ws.index(w2)
            # (f_a - f_b) vanishes on t_{j1} = t_{j2}: collect coefficients after merging exponents
            merged: dict = {}
            for mi, m in enumerate(monos):
                e = list(m)
                e[j2 - 1] += e[j1 - 1]
                e[j1 - 1] = 0
                merged.setdefault(tuple(e), []).append(mi)
            for group in merged.values():
                row = [Fraction(0)] * nvars
                for mi in group:
                    row[a * len(monos) + mi] += 1
                    row[b * len(monos) + mi] -= 1
                rows.append(row)
        constrained = nvars - (mat_rank(rows) if rows else 0)
        image = sum(cnt * comb(D - deg + k - 1, k - 1) for deg, cnt in h.items() if deg <= D)
        out[D] = {"divisibility_module": constrained, "image": image}
    return out


def verify_gkm(n: int, k: int, d: int, seed: int = 17) -> list:
    return [verify_kills_ideal(n, k, d), verify_injectivity(n, k, d, seed), verify_divisibility(n, k, d)]
