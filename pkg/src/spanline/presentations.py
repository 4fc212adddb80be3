"""Named ideals and bases, ranks, and the algebraic checks behind the presentation."""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .combin import falling, stirling2, substaircase_sequences
from .exact_poly import LEX, Polynomial, VarUniverse, embed, is_integer_polynomial, permute_variables
from .groebner import GroebnerBasis, buchberger, standard_monomials
from .linalg import ColumnSolver, det, rref
from .loci import (
    _alternating, check_params, family_i_range, family_ideal_gens, family_ii_range, point_count,
    product_relation,
)
from .symfun import (
    as_partition, complete, elementary, gaussian_binomial, partitions_in_box, schur, y_permutations,
)


@dataclass(frozen=True)
class IdealPresentation:
    name: str
    n: int
    k: int
    d: int
    universe: VarUniverse
    generators: tuple

    def to_json(self) -> dict:
        return {"name": self.name, "n": self.n, "k": self.k, "d": self.d,
                "generators": [g.to_json() for g in self.generators]}


def rank(n: int, k: int, d: int) -> int:
    return falling(k, d) * stirling2(n, d)


def jq_gens(n: int, k: int, d: int) -> list:
    """Generators of J^Q in Q[x, y]."""
    check_params(n, k, d)
    u = VarUniverse(n, d, 0)
    ys, xs = list(u.y_indices), list(u.x_indices)
    gens = [complete(r, ys, u) for r in family_i_range(k, d)]
    gens += [_alternating(r, lambda a: elementary(a, xs, u), ys, u) for r in family_ii_range(n, d)]
    gens += [product_relation(i, ys, u) for i in xs]
    return gens


def ideal_Jq(n: int, k: int, d: int) -> IdealPresentation:
    gens = jq_gens(n, k, d)
    return IdealPresentation("Jq", n, k, d, gens[0].universe, tuple(gens))


def ideal_Jqt(n: int, k: int, d: int) -> IdealPresentation:
    gens = family_ideal_gens(n, k, d)
    return IdealPresentation("Jqt", n, k, d, gens[0].universe, tuple(gens))


def ideal_I(n: int, k: int, d: int) -> IdealPresentation:
    """The presentation ideal; as a generator set it coincides with J^{Q,t}."""
    gens = family_ideal_gens(n, k, d)
    return IdealPresentation("I", n, k, d, gens[0].universe, tuple(gens))


def ideal_Ink(n: int, k: int) -> IdealPresentation:
    """prod_j (x_i - t_j) for each i, and sum_{a+b=r} (-1)^b e_a(x) h_b(t) for r > n-k."""
    check_params(n, k, k)
    u = VarUniverse(n, 0, k)
    xs, ts = list(u.x_indices), list(u.t_indices)
    gens = [product_relation(i, ts, u) for i in xs]
    gens += [_alternating(r, lambda a: elementary(a, xs, u), ts, u) for r in range(n - k + 1, n + 1)]
    return IdealPresentation("Ink", n, k, k, u, tuple(gens))


def named_ideal(name: str, n: int, k: int, d: int | None = None) -> IdealPresentation:
    if name == "Ink":
        return ideal_Ink(n, k)
    if d is None:
        raise ValueError(f"ideal {name} needs d")
    table = {"I": ideal_I, "Jq": ideal_Jq, "Jqt": ideal_Jqt}
    if name not in table:
        raise ValueError(f"unknown ideal {name!r}; choose from I, Jq, Jqt, Ink")
    return table[name](n, k, d)


# -- bases ---------------------------------------------------------------

def basis_A_exponents(n: int, k: int, d: int) -> list:
    """Exponent vectors (a; b) with a substaircase and b_i < k-d+i."""
    check_params(n, k, d)
    ys = list(itertools.product(*(range(k - d + i) for i in range(1, d + 1))))
    return [a + b for a in substaircase_sequences(n, d) for b in ys]


@dataclass(frozen=True)
class BasisFamily:
    name: str
    n: int
    k: int
    d: int
    labels: tuple      # exponent vectors for A, (x-exponents, partition) for C
    elements: tuple    # Polynomials

    def __len__(self):
        return len(self.elements)

    def t_augmented(self, max_t_degree: int):
        """Elements times t-monomials of degree <= max_t_degree (the basis over Q of the t-family)."""
        u = self.elements[0].universe
        if u.k == 0:
            raise ValueError("t-augmentation needs a universe with t-variables")
        ts = list(u.t_indices)
        for deg in range(max_t_degree + 1):
            for combo in itertools.combinations_with_replacement(ts, deg):
                e = [0] * u.nvars
                for i in combo:
                    e[i] += 1
                for el in self.elements:
                    yield el.mul_monomial(tuple(e))


def _universe(n, k, d, with_t: bool) -> VarUniverse:
    return VarUniverse(n, d, k if with_t else 0)


def basis_A(n: int, k: int, d: int, with_t: bool = False) -> BasisFamily:
    u = _universe(n, k, d, with_t)
    labels = basis_A_exponents(n, k, d)
    pad = (0,) * u.k
    elements = tuple(Polynomial(u, {e + pad: 1}) for e in labels)
    return BasisFamily("A_t" if with_t else "A", n, k, d, tuple(labels), elements)


def basis_C(n: int, k: int, d: int, with_t: bool = False) -> BasisFamily:
    check_params(n, k, d)
    u = _universe(n, k, d, with_t)
    ys = list(u.y_indices)
    pad = (0,) * (d + u.k)
    labels, elements = [], []
    for a in substaircase_sequences(n, d):
        xm = Polynomial(u, {a + pad: 1})
        for lam in partitions_in_box(d, k - d):
            labels.append((a, lam))
            elements.append(xm * _schur_cached(lam, u))
    return BasisFamily("C_t" if with_t else "C", n, k, d, tuple(labels), tuple(elements))


@lru_cache(maxsize=None)
def _schur_cached(lam: tuple, u: VarUniverse) -> Polynomial:
    return schur(lam, list(u.y_indices), u)


# -- invariant elements --------------------------------------------------

@dataclass(frozen=True)
class InvariantElement:
    """y-symmetric polynomial written as sum of c * x^a * s_lambda(y) * t^c."""
    universe: VarUniverse
    expansion: tuple  # sorted ((x-exponents, partition, t-exponents), Fraction)

    def to_polynomial(self) -> Polynomial:
        u = self.universe
        acc = u.zero()
        for (xa, lam, tc), c in self.expansion:
            mono = xa + (0,) * u.d + tc
            acc = acc + _schur_cached(lam, u).mul_monomial(mono, c)
        return acc

    @classmethod
    def from_polynomial(cls, f: Polynomial) -> "InvariantElement":
        u = f.universe
        n, d = u.n, u.d
        groups: dict = {}
        for m, c in f.terms.items():
            key = (m[:n], m[n + d:])
            groups.setdefault(key, {})[m[n:n + d]] = c
        out = {}
        for (xa, tc), ypoly in groups.items():
            ypoly = dict(ypoly)
            while ypoly:
                lead = max(ypoly)
                lam = tuple(lead)
                if any(lam[i] < lam[i + 1] for i in range(d - 1)):
                    raise ValueError("polynomial is not symmetric in the y-variables")
                c = ypoly[lead]
                out[(xa, as_partition(lam), tc)] = c
                for m, v in _schur_cached(as_partition(lam), u).terms.items():
                    ym = m[n:n + d]
                    nv = ypoly.get(ym, 0) - c * v
                    if nv:
                        ypoly[ym] = nv
                    else:
                        ypoly.pop(ym, None)
        return cls(u, tuple(sorted(out.items())))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for _, c in self.expansion)


# -- verification reports -----------------------------------------------

@dataclass
class Report:
    name: str
    n: int
    k: int
    d: int
    ok: bool
    details: dict = field(default_factory=dict)
    elapsed_ms: int = 0

    def to_json(self) -> dict:
        return {"name": self.name, "instance": [self.n, self.k, self.d], "pass": self.ok,
                "details": self.details, "elapsed_ms": self.elapsed_ms}


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = int((time.perf_counter() - self.start) * 1000)


@lru_cache(maxsize=None)
def jq_groebner(n: int, k: int, d: int) -> GroebnerBasis:
    return buchberger(jq_gens(n, k, d), LEX)


@lru_cache(maxsize=None)
def jqt_groebner(n: int, k: int, d: int) -> GroebnerBasis:
    return buchberger(family_ideal_gens(n, k, d), LEX)


def verify_At_freeness(n: int, k: int, d: int) -> Report:
    with _Timer() as tm:
        gb = jqt_groebner(n, k, d)
        u = gb.universe
        t_free_lms = all(all(lm[i] == 0 for i in u.t_indices) for lm in gb.leading_monomials)
        xy = list(u.x_indices) + list(u.y_indices)
        std = standard_monomials(gb, xy)
        expected = sorted((e + (0,) * k for e in basis_A_exponents(n, k, d)), key=lambda m: (sum(m), m))
        match = std == expected
    return Report("at-freeness", n, k, d, t_free_lms and match,
                  {"leading_monomials_t_free": t_free_lms, "standard_monomials_match": match,
                   "rank": len(std), "expected": point_count(n, k, d), "basis_size": len(gb)}, tm.ms)


def _coords(f: Polynomial, index: dict) -> list:
    v = [Fraction(0)] * len(index)
    for m, c in f.terms.items():
        v[index[m]] = c
    return v


class _QuotientNF:
    """Normal forms in Q[x,y]/J^Q with per-monomial caching, as coordinate vectors over A."""

    def __init__(self, n, k, d):
        self.gb = jq_groebner(n, k, d)
        self.universe = self.gb.universe
        self.basis = basis_A_exponents(n, k, d)
        self.index = {m: i for i, m in enumerate(self.basis)}
        self._cache: dict = {}

    def monomial(self, m: tuple) -> dict:
        if m not in self._cache:
            nf = self.gb.normal_form(Polynomial(self.universe, {m: 1}))
            self._cache[m] = nf.terms
        return self._cache[m]

    def vector(self, f: Polynomial) -> list:
        v = [Fraction(0)] * len(self.basis)
        for m, c in f.terms.items():
            for mm, cc in self.monomial(m).items():
                v[self.index[mm]] += c * cc
        return v


def _reynolds_vectors(q: _QuotientNF) -> list:
    """Reynolds images of the A-basis, as coordinate vectors (up to the 1/d! factor)."""
    u = q.universe
    perms = list(y_permutations(u))
    out = []
    for m in q.basis:
        f = Polynomial(u, {m: 1})
        images = [permute_variables(f, p) for p in perms]
        v = [Fraction(0)] * len(q.basis)
        for img in images:
            for i, c in enumerate(q.vector(img)):
                v[i] += c
        out.append(v)
    return out


def verify_invariant_quotient(n: int, k: int, d: int) -> Report:
    with _Timer() as tm:
        q = _QuotientNF(n, k, d)
        std_ok = standard_monomials(q.gb) == sorted(q.basis, key=lambda m: (sum(m), m))
        rows, pivots = rref(_reynolds_vectors(q))
        inv_dim = len(rows)
        C = basis_C(n, k, d)
        cvecs = [q.vector(c) for c in C.elements]
        # coordinates of each C image in the RREF basis of the invariant subspace
        coords = [[v[p] for p in pivots] for v in cvecs]
        in_span = all(
            [sum((cj * rows[i][col] for i, cj in enumerate(cv)), Fraction(0)) for col in range(len(q.basis))] == v
            for cv, v in zip(coords, cvecs))
        square = len(coords) == inv_dim
        determinant = det(coords) if square and in_span else Fraction(0)
        expected = rank(n, k, d)
        ok = std_ok and inv_dim == expected and in_span and square and determinant != 0
    return Report("invariant-quotient", n, k, d, ok,
                  {"invariant_dimension": inv_dim, "expected": expected, "c_in_invariants": in_span,
                   "c_size": len(coords), "determinant": str(determinant)}, tm.ms)


def hilbert_factorization(n: int, k: int, d: int) -> Report:
    with _Timer() as tm:
        q = _QuotientNF(n, k, d)
        vectors = _reynolds_vectors(q)
        by_degree: dict = {}
        for m, v in zip(q.basis, vectors):
            by_degree.setdefault(sum(m), []).append(v)
        top = max(by_degree)
        invariant_series = [0] * (top + 1)
        for deg, vs in by_degree.items():
            invariant_series[deg] = len(rref(vs)[1])
        left = [0] * (max(sum(a) for a in substaircase_sequences(n, d)) + 1)
        for a in substaircase_sequences(n, d):
            left[sum(a)] += 1
        right = gaussian_binomial(k, d)
        product = [0] * (len(left) + len(right) - 1)
        for i, a in enumerate(left):
            for j, b in enumerate(right):
                product[i + j] += a * b
        lhs = _trim(invariant_series)
        rhs = _trim(product)
    return Report("hilbert-factorization", n, k, d, lhs == rhs,
                  {"invariant_series": lhs, "substaircase_series": left, "gaussian_binomial": list(right),
                   "product": rhs, "value_at_1": sum(lhs)}, tm.ms)


def _trim(seq: list) -> list:
    seq = list(seq)
    while seq and seq[-1] == 0:
        seq.pop()
    return seq


# -- integrality of structure constants ------------------------------------

class CtCoordinates:
    """Express elements of Q[x,y,t]/J^{Q,t} in the C^t basis by t-adic lifting.

    NF modulo the lex basis of J^{Q,t} has the form sum_a p_a(t) a over the
    standard monomials A. With M(t) the matrix of NF(c) for c in C, and M0 its
    t-free part, a target is peeled off one t-degree at a time: the lowest
    t-degree residual is solved against M0, the solution (times its
    t-monomial) is recorded, and M(t) times it is subtracted.
    """

    def __init__(self, n: int, k: int, d: int):
        self.n, self.k, self.d = n, k, d
        self.gb = jqt_groebner(n, k, d)
        self.universe = u = self.gb.universe
        self.C = basis_C(n, k, d, with_t=True)
        self.A = [e + (0,) * k for e in basis_A_exponents(n, k, d)]
        self.a_index = {self._xy(m): i for i, m in enumerate(self.A)}
        self.nf_C = [self._split(self.gb.normal_form(c)) for c in self.C.elements]
        m0 = []
        zero_t = (0,) * k
        for parts in self.nf_C:
            m0.append(parts.get(zero_t, [Fraction(0)] * len(self.A)))
        self.solver = ColumnSolver(m0)

    def _xy(self, m):
        return m[: self.n + self.d]

    def _split(self, f: Polynomial) -> dict:
        """t-monomial -> coordinate vector over A."""
        out: dict = {}
        nxy = self.n + self.d
        for m, c in f.terms.items():
            vec = out.setdefault(m[nxy:], [Fraction(0)] * len(self.A))
            vec[self.a_index[m[:nxy]]] += c
        return out

    def coordinates(self, f: Polynomial) -> list:
        """Polynomials p_c(t) (as dicts t-monomial -> Fraction) with f = sum_c p_c c modulo the ideal."""
        residual = self._split(self.gb.normal_form(f))
        residual = {t: v for t, v in residual.items() if any(v)}
        result = [dict() for _ in self.C.elements]
        bound = (f.degree() if not f.is_zero() else 0) + 1
        while residual:
            tdeg = min(sum(t) for t in residual)
            if tdeg > bound:
                raise ArithmeticError("t-adic lifting did not terminate")
            for tau in sorted(t for t in residual if sum(t) == tdeg):
                vec = residual.get(tau)
                if vec is None or not any(vec):
                    residual.pop(tau, None)
                    continue
                u = self.solver.solve(vec)
                if u is None:
                    raise ArithmeticError(f"residual at t-monomial {tau} is outside the span of C")
                for ci, coeff in enumerate(u):
                    if not coeff:
                        continue
                    result[ci][tau] = result[ci].get(tau, 0) + coeff
                    for sigma, col in self.nf_C[ci].items():
                        key = tuple(a + b for a, b in zip(tau, sigma))
                        target = residual.setdefault(key, [Fraction(0)] * len(self.A))
                        for i, v in enumerate(col):
                            if v:
                                target[i] -= coeff * v
                residual = {t: v for t, v in residual.items() if any(v)}
        return [{t: c for t, c in r.items() if c} for r in result]


def verify_integrality(n: int, k: int, d: int) -> Report:
    with _Timer() as tm:
        coords = CtCoordinates(n, k, d)
        elements = coords.C.elements
        bad = []
        checked = 0
        for i, j in itertools.combinations_with_replacement(range(len(elements)), 2):
            cs = coords.coordinates(elements[i] * elements[j])
            checked += 1
            if not all(c.denominator == 1 for poly in cs for c in poly.values()):
                bad.append([i, j])
    return Report("integrality", n, k, d, not bad,
                  {"pairs_checked": checked, "non_integral_pairs": bad[:10], "basis_size": len(elements)}, tm.ms)


def verify_h_integrality(n: int, k: int, d: int) -> Report:
    """h_{k-d+i}(y_i..y_d) lies in (h_r(y) : r > k-d)."""
    with _Timer() as tm:
        u = VarUniverse(0, d, 0)
        ys = list(u.y_indices)
        a = k - d
        gb = buchberger([complete(r, ys, u) for r in range(a + 1, a + d + 1)], LEX)
        results = [gb.normal_form(complete(a + i, ys[i - 1:], u)).is_zero() for i in range(1, d + 1)]
    return Report("h-integrality", n, k, d, all(results), {"members": results}, tm.ms)


def verify_collapse(n: int, k: int) -> Report:
    """e_r(y) - e_r(t) reduces to 0 modulo I_{n,k,k} for 1 <= r <= k."""
    with _Timer() as tm:
        gb = jqt_groebner(n, k, k)
        u = gb.universe
        ys, ts = list(u.y_indices), list(u.t_indices)
        results = [gb.normal_form(elementary(r, ys, u) - elementary(r, ts, u)).is_zero() for r in range(1, k + 1)]
    return Report("collapse", n, k, k, all(results), {"members": results}, tm.ms)


def verify_gb_integrality(n: int, k: int, d: int) -> Report:
    """Empirical: the reduced lex basis of J^Q has integer coefficients."""
    gb = jq_groebner(n, k, d)
    integral = all(is_integer_polynomial(g) for g in gb.generators)
    return Report("gb-integrality", n, k, d, integral, {"basis_size": len(gb)})
