"""Buchberger's algorithm, normal forms and standard monomials.

Internally polynomials are dicts {monomial: int} kept primitive (content
stripped) so the inner loops run on Python ints instead of Fractions. For a
graded order the internal monomial carries its total degree in front, which
makes native tuple comparison agree with the term order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .exact_poly import (
    GRLEX, LEX, Monomial, Polynomial, TermOrder, VarUniverse, mono_divides, top_form,
)

CONTENT_EVERY = 24  # reduction steps between content strips


class _Engine:
    def __init__(self, universe: VarUniverse, order: TermOrder):
        self.universe = universe
        self.order = order
        self.graded = order.graded

    def enc(self, m: Monomial) -> tuple:
        return (sum(m),) + m if self.graded else m

    def dec(self, im: tuple) -> Monomial:
        return im[1:] if self.graded else im

    def lcm(self, a: tuple, b: tuple) -> tuple:
        if self.graded:
            e = tuple(max(i, j) for i, j in zip(a[1:], b[1:]))
            return (sum(e),) + e
        return tuple(max(i, j) for i, j in zip(a, b))

    def degree(self, im: tuple) -> int:
        return im[0] if self.graded else sum(im)

    def encode(self, f: Polynomial) -> dict:
        """Primitive integer multiple of f with positive leading coefficient."""
        den = 1
        for c in f.terms.values():
            den = lcm(den, c.denominator)
        p = {self.enc(m): int(c * den) for m, c in f.terms.items()}
        return primitive(p)

    def decode(self, p: dict, scale: Fraction = Fraction(1)) -> Polynomial:
        return Polynomial(self.universe, {self.dec(m): Fraction(c) * scale for m, c in p.items()}, _trusted=True)


def primitive(p: dict) -> dict:
    if not p:
        return p
    g = gcd(*p.values())
    if p[max(p)] < 0:
        g = -g
    if g != 1:
        p = {m: c // g for m, c in p.items()}
    return p


def _divides(a: tuple, b: tuple) -> bool:
    for i, j in zip(a, b):
        if i > j:
            return False
    return True


def _find_divisor(m: tuple, basis: Sequence):
    for g in basis:
        lm = g[0]
        if _divides(lm, m):
            return g
    return None


def _reduce(p: dict, basis: Sequence, track: bool = False):
    """Fully reduce p (consumed) by basis entries (lm, lc, terms).

    Returns the remainder as a primitive int dict, or with track=True the
    exact remainder as a dict of Fractions (so that f - remainder lies in the ideal).
    """
    rem: dict = {}
    scale = Fraction(1)  # current p + rem*scale_of_rem equals scale * (original p)
    steps = 0
    while p:
        m = max(p)
        c = p[m]
        g = _find_divisor(m, basis)
        if g is None:
            del p[m]
            rem[m] = Fraction(c) / scale if track else c
            continue
        lm, lc, gt = g
        g1 = gcd(lc, c)
        a, b = lc // g1, c // g1
        if a != 1:
            for key in p:
                p[key] *= a
            if not track:
                for key in rem:
                    rem[key] *= a
            scale *= a
        q = tuple(i - j for i, j in zip(m, lm))
        get = p.get
        for gm, gc in gt.items():
            nm = tuple(i + j for i, j in zip(gm, q))
            v = get(nm, 0) - b * gc
            if v:
                p[nm] = v
            else:
                p.pop(nm, None)
        steps += 1
        if steps % CONTENT_EVERY == 0 and p:
            vals = list(p.values()) if track else list(p.values()) + list(rem.values())
            cg = gcd(*vals)
            if cg > 1:
                for key in p:
                    p[key] //= cg
                if not track:
                    for key in rem:
                        rem[key] //= cg
                scale /= cg
    if track:
        return rem
    return primitive(rem)


def _entry(p: dict) -> tuple:
    lm = max(p)
    return (lm, p[lm], p)


@dataclass
class BuchbergerStats:
    pairs_considered: int = 0
    pairs_reduced: int = 0
    zero_reductions: int = 0
    basis_size: int = 0


def _buchberger_int(polys: list, engine: _Engine, stats: BuchbergerStats) -> list:
    """Gebauer-Moller style Buchberger on primitive int dicts; returns a minimal GB (unreduced tails)."""
    f: list = []        # all entries ever added
    G: set = set()      # indices of current basis
    B: set = set()      # pending pairs (i, j), i < j

    def lcm_of(i, j):
        return engine.lcm(f[i][0], f[j][0])

    def update(ih):
        nonlocal G, B
        mh = f[ih][0]
        C = sorted(G)
        D = []
        for pos, ig in enumerate(C):
            mg = f[ig][0]
            L = engine.lcm(mh, mg)
            coprime = engine.degree(L) == engine.degree(mh) + engine.degree(mg)
            if coprime:
                D.append((ig, L, True))
                continue
            dominated = False
            for other in C[pos + 1:]:
                if _divides(engine.lcm(mh, f[other][0]), L):
                    dominated = True
                    break
            if not dominated:
                for (og, _, _) in D:
                    if _divides(engine.lcm(mh, f[og][0]), L):
                        dominated = True
                        break
            if not dominated:
                D.append((ig, L, False))
        E = {(min(ig, ih), max(ig, ih)) for ig, _, coprime in D if not coprime}
        newB = set()
        for (i, j) in B:
            L = lcm_of(i, j)
            if (not _divides(mh, L) or engine.lcm(f[i][0], mh) == L or engine.lcm(f[j][0], mh) == L):
                newB.add((i, j))
        newB |= E
        G = {ig for ig in G if not _divides(mh, f[ig][0])}
        G.add(ih)
        B = newB

    def current_basis():
        return [f[i] for i in sorted(G, key=lambda i: (f[i][0], i))]

    # Inputs: sort by leading monomial ascending so small polynomials enter first.
    for p in sorted(polys, key=lambda p: (max(p), len(p))):
        r = _reduce(dict(p), current_basis())
        if not r:
            continue
        f.append(_entry(r))
        update(len(f) - 1)

    while B:
        i, j = min(B, key=lambda ij: (engine.degree(lcm_of(*ij)), ij))
        B.discard((i, j))
        stats.pairs_considered += 1
        L = lcm_of(i, j)
        lmi, lci, ti = f[i]
        lmj, lcj, tj = f[j]
        g1 = gcd(lci, lcj)
        ai, aj = lcj // g1, lci // g1
        qi = tuple(a - b for a, b in zip(L, lmi))
        qj = tuple(a - b for a, b in zip(L, lmj))
        s: dict = {}
        for m, c in ti.items():
            s[tuple(a + b for a, b in zip(m, qi))] = ai * c
        for m, c in tj.items():
            nm = tuple(a + b for a, b in zip(m, qj))
            v = s.get(nm, 0) - aj * c
            if v:
                s[nm] = v
            else:
                s.pop(nm, None)
        stats.pairs_reduced += 1
        r = _reduce(s, current_basis())
        if not r:
            stats.zero_reductions += 1
            continue
        f.append(_entry(r))
        update(len(f) - 1)

    return [f[i] for i in sorted(G)]


def _interreduce(entries: list) -> list:
    """Reduce tails of a minimal GB; output sorted by leading monomial descending."""
    entries = sorted(entries, key=lambda e: e[0], reverse=True)
    out = []
    for idx, (lm, lc, terms) in enumerate(entries):
        others = entries[:idx] + entries[idx + 1:]
        tail = dict(terms)
        head = tail.pop(lm)
        red = _reduce(tail, others, track=True)
        # terms = head*lm + tail ; tail reduces to red (exact), so the reduced element is lm + red/head
        poly = {lm: Fraction(1)}
        for m, c in red.items():
            poly[m] = c / head
        out.append(poly)
    return out


class GroebnerBasis:
    """Reduced, monic Groebner basis with normal form and standard-monomial access."""

    def __init__(self, universe: VarUniverse, order: TermOrder, generators: list, stats: BuchbergerStats | None = None):
        self.universe = universe
        self.order = order
        self.generators = generators  # monic Polynomials, sorted by leading monomial descending
        self.stats = stats or BuchbergerStats(basis_size=len(generators))
        self._engine = _Engine(universe, order)
        self._int_basis = [_entry(self._engine.encode(g)) for g in generators]
        self._int_basis.sort(key=lambda e: e[0])

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    @property
    def leading_monomials(self) -> list:
        return [g.leading_monomial(self.order) for g in self.generators]

    def is_unit_ideal(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.universe != self.universe:
            raise ValueError("polynomial and basis live in different universes")
        if f.is_zero():
            return f
        eng = self._engine
        den = 1
        for c in f.terms.values():
            den = lcm(den, c.denominator)
        p = {eng.enc(m): int(c * den) for m, c in f.terms.items()}
        rem = _reduce(p, self._int_basis, track=True)
        return Polynomial(self.universe, {eng.dec(m): c / den for m, c in rem.items()}, _trusted=True)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def canonical(self) -> tuple:
        return tuple(tuple(sorted(g.terms.items())) for g in self.generators)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (self.universe, self.order, self.canonical()) == (other.universe, other.order, other.canonical())

    def to_json(self) -> dict:
        u = self.universe
        return {"order": self.order.kind, "vars": {"n": u.n, "d": u.d, "k": u.k},
                "generators": [g.to_json(self.order) for g in self.generators]}

    @classmethod
    def from_json(cls, data: dict) -> "GroebnerBasis":
        v = data["vars"]
        u = VarUniverse(v["n"], v.get("d", 0), v.get("k", 0))
        gens = [Polynomial.from_json(g) for g in data["generators"]]
        return cls(u, TermOrder(data["order"]), gens)


def buchberger(gens: Iterable[Polynomial], order: TermOrder = LEX) -> GroebnerBasis:
    gens = [g for g in gens]
    if not gens:
        raise ValueError("need at least one generator")
    universe = gens[0].universe
    if any(g.universe != universe for g in gens):
        raise ValueError("generators live in different universes")
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        raise ValueError("all generators are zero")
    eng = _Engine(universe, order)
    stats = BuchbergerStats()
    minimal = _buchberger_int([eng.encode(g) for g in nonzero], eng, stats)
    reduced = _interreduce(minimal)
    polys = [Polynomial(universe, {eng.dec(m): c for m, c in p.items()}, _trusted=True) for p in reduced]
    stats.basis_size = len(polys)
    return GroebnerBasis(universe, order, polys, stats)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.normal_form(f)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    L = tuple(max(a, b) for a, b in zip(lf, lg))
    return (f.mul_monomial(tuple(a - b for a, b in zip(L, lf)), 1 / f.terms[lf])
            - g.mul_monomial(tuple(a - b for a, b in zip(L, lg)), 1 / g.terms[lg]))


def audit(gb: GroebnerBasis) -> bool:
    """Post-hoc check: every S-polynomial reduces to 0 and the basis is reduced."""
    gens = gb.generators
    lms = gb.leading_monomials
    for g in gens:
        if g.leading_coefficient(gb.order) != 1:
            return False
    for i, g in enumerate(gens):
        for m in g.terms:
            for j, lm in enumerate(lms):
                if j != i and mono_divides(lm, m):
                    return False
    for i, j in itertools.combinations(range(len(gens)), 2):
        if not gb.normal_form(s_polynomial(gens[i], gens[j], gb.order)).is_zero():
            return False
    return True


@dataclass(frozen=True)
class InfiniteDimension:
    free_vars: tuple  # variable names with no pure-power leading monomial

    def __str__(self):
        return "infinite (free: " + ", ".join(self.free_vars) + ")"


def _restricted_lms(gb: GroebnerBasis, variables: Sequence[int]) -> list:
    allowed = set(variables)
    return [lm for lm in gb.leading_monomials if all(e == 0 or i in allowed for i, e in enumerate(lm))]


def _free_variables(gb: GroebnerBasis, variables: Sequence[int]) -> tuple:
    lms = _restricted_lms(gb, variables)
    if any(sum(lm) == 0 for lm in lms):
        return ()
    free = []
    for v in variables:
        if not any(lm[v] > 0 and sum(lm) == lm[v] for lm in lms):
            free.append(gb.universe.names[v])
    return tuple(free)


def standard_monomials(gb: GroebnerBasis, variables: Sequence[int] | None = None,
                       max_degree: int | None = None) -> list:
    """Monomials in the given variables (default all) outside the initial ideal.

    Monomials supported on other variables are excluded. Sorted by (degree, lex).
    """
    u = gb.universe
    variables = list(range(u.nvars)) if variables is None else sorted(variables)
    if max_degree is None:
        free = _free_variables(gb, variables)
        if free:
            raise ValueError(f"infinitely many standard monomials; free variables {free}")
    lms = _restricted_lms(gb, variables)
    out = []
    cur = [0] * u.nvars

    def in_initial(m):
        return any(mono_divides(lm, m) for lm in lms)

    def rec(pos, deg):
        if pos == len(variables):
            out.append(tuple(cur))
            return
        v = variables[pos]
        e = 0
        while True:
            cur[v] = e
            if in_initial(tuple(cur)) or (max_degree is not None and deg + e > max_degree):
                break
            rec(pos + 1, deg + e)
            e += 1
        cur[v] = 0

    rec(0, 0)
    return sorted(out, key=lambda m: (sum(m), m))


def quotient_dimension(gb: GroebnerBasis, variables: Sequence[int] | None = None):
    """Number of standard monomials, or InfiniteDimension naming the free variables."""
    u = gb.universe
    variables = list(range(u.nvars)) if variables is None else sorted(variables)
    free = _free_variables(gb, variables)
    if free:
        return InfiniteDimension(free)
    return len(standard_monomials(gb, variables))


def hilbert_series(gb: GroebnerBasis, variables: Sequence[int] | None = None,
                   max_degree: int | None = None) -> tuple:
    """Coefficients of sum over standard monomials of q^deg, as a tuple indexed by degree."""
    mons = standard_monomials(gb, variables, max_degree)
    if not mons:
        return ()
    top = max(sum(m) for m in mons)
    counts = [0] * (top + 1)
    for m in mons:
        counts[sum(m)] += 1
    return tuple(counts)


def associated_graded(gens: Iterable[Polynomial]) -> list:
    """Generators of gr I: top forms of a graded-lex Groebner basis."""
    gb = buchberger(gens, GRLEX)
    if gb.is_unit_ideal():
        raise ValueError("ideal is the whole ring")
    return [top_form(g) for g in gb.generators]


def ideal_equal(gens_a: Iterable[Polynomial], gens_b: Iterable[Polynomial], order: TermOrder = GRLEX) -> bool:
    return buchberger(gens_a, order) == buchberger(gens_b, order)
