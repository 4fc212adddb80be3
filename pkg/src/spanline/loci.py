"""Finite point loci, their vanishing ideals, and the orbit-harmonics check."""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from .combin import falling, stirling2
from .exact_poly import GRLEX, LEX, Polynomial, VarUniverse, evaluate, top_form
from .groebner import buchberger, quotient_dimension, standard_monomials
from .symfun import complete, elementary


@dataclass(frozen=True)
class LocusSpec:
    n: int
    k: int
    d: int
    alpha: tuple | None = None

    def __post_init__(self):
        check_params(self.n, self.k, self.d)
        if self.alpha is not None:
            alpha = tuple(Fraction(a) for a in self.alpha)
            if len(alpha) != self.k:
                raise ValueError(f"alpha needs {self.k} entries, got {len(alpha)}")
            if len(set(alpha)) != len(alpha):
                raise ValueError(f"alpha entries must be distinct: {[str(a) for a in alpha]}")
            object.__setattr__(self, "alpha", alpha)

    @property
    def universe(self) -> VarUniverse:
        return VarUniverse(self.n, self.d, 0)

    def require_alpha(self) -> tuple:
        if self.alpha is None:
            raise ValueError("this operation needs a specialized alpha")
        return self.alpha


def check_params(n: int, k: int, d: int) -> None:
    if not (n >= k >= d >= 1):
        raise ValueError(f"need n >= k >= d >= 1, got (n,k,d)=({n},{k},{d})")


def default_alpha(k: int) -> tuple:
    return tuple(Fraction(i) for i in range(1, k + 1))


def random_alpha(k: int, seed: int) -> tuple:
    """k distinct small rationals from a seeded generator."""
    rng = random.Random(seed)
    out: list = []
    while len(out) < k:
        a = Fraction(rng.randint(-40, 40), rng.randint(1, 7))
        if a not in out:
            out.append(a)
    return tuple(out)


def point_count(n: int, k: int, d: int) -> int:
    return falling(k, d) * factorial(d) * stirling2(n, d)


def enumerate_points(spec: LocusSpec) -> list:
    """All (z_1..z_n; z_{n+1}..z_{n+d}) with values in alpha, last d distinct, same value sets."""
    alpha = spec.require_alpha()
    n, d = spec.n, spec.d
    points = []
    for tail in itertools.permutations(alpha, d):
        values = set(tail)
        for head in itertools.product(tail, repeat=n):
            if set(head) == values:
                points.append(tuple(head) + tuple(tail))
    points.sort()
    return points


def _alternating(r: int, e_of, y_vars, universe: VarUniverse) -> Polynomial:
    """sum_{a+b=r} (-1)^b e_a(.) h_b(y), with e_of(a) supplying e_a(.) as a Polynomial."""
    acc = universe.zero()
    for b in range(r + 1):
        term = e_of(r - b) * complete(b, y_vars, universe)
        acc = acc + term if b % 2 == 0 else acc - term
    return acc


def _scalar_elementary(values: Sequence[Fraction]):
    """e_a of a list of numbers, for all a."""
    coeffs = [Fraction(1)]
    for v in values:
        nxt = coeffs + [Fraction(0)]
        for i in range(len(coeffs), 0, -1):
            nxt[i] += v * coeffs[i - 1]
        coeffs = nxt
    return lambda a: coeffs[a] if 0 <= a < len(coeffs) else Fraction(0)


def product_relation(i_var: int, roots, universe: VarUniverse) -> Polynomial:
    """x^m - x^{m-1} e_1(roots) + ... + (-1)^m e_m(roots), roots given as variable indices."""
    m = len(roots)
    x = universe.var(i_var)
    acc = universe.zero()
    for j in range(m + 1):
        term = x ** (m - j) * elementary(j, roots, universe)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def family_i_range(k: int, d: int) -> range:
    # r > k-d; higher r follow from the recurrence g_r = -sum_{i=1}^{d} e_i(y) g_{r-i}
    return range(k - d + 1, k + 1)


def family_ii_range(n: int, d: int) -> range:
    return range(n - d + 1, n + 1)


def locus_ideal_gens(spec: LocusSpec) -> list:
    alpha = spec.require_alpha()
    u = spec.universe
    ys = list(u.y_indices)
    xs = list(u.x_indices)
    e_alpha = _scalar_elementary(alpha)
    gens = [_alternating(r, lambda a: u.const(e_alpha(a)), ys, u) for r in family_i_range(spec.k, spec.d)]
    gens += [_alternating(r, lambda a: elementary(a, xs, u), ys, u) for r in family_ii_range(spec.n, spec.d)]
    gens += [product_relation(i, ys, u) for i in xs]
    return gens


def family_ideal_gens(n: int, k: int, d: int) -> list:
    check_params(n, k, d)
    u = VarUniverse(n, d, k)
    ys, xs, ts = list(u.y_indices), list(u.x_indices), list(u.t_indices)
    gens = [_alternating(r, lambda a: elementary(a, ts, u), ys, u) for r in family_i_range(k, d)]
    gens += [_alternating(r, lambda a: elementary(a, xs, u), ys, u) for r in family_ii_range(n, d)]
    gens += [product_relation(i, ys, u) for i in xs]
    return gens


def family_points_membership(z: Sequence, n: int, k: int, d: int) -> bool:
    """Literal witness search: injective f (y-slots to t-slots) and surjective g (x-slots to y-slots)."""
    z = [Fraction(v) for v in z]
    if len(z) != n + d + k:
        raise ValueError(f"point needs {n + d + k} coordinates")
    xs, ys, ts = z[:n], z[n:n + d], z[n + d:]
    f_ok = any(all(ys[i] == ts[f[i]] for i in range(d)) for f in itertools.permutations(range(k), d))
    if not f_ok:
        return False
    for g in itertools.product(range(d), repeat=n):
        if len(set(g)) == d and all(xs[j] == ys[g[j]] for j in range(n)):
            return True
    return False


def orbit_partition(points: list, n: int, d: int) -> list:
    """Orbits of S_d permuting the last d coordinates; asserts the action is free."""
    index = {p: i for i, p in enumerate(points)}
    seen = set()
    orbits = []
    for p in points:
        if p in seen:
            continue
        orbit = []
        for perm in itertools.permutations(range(d)):
            q = p[:n] + tuple(p[n + perm[i]] for i in range(d))
            if q not in index:
                raise AssertionError(f"locus not closed under S_{d}: {q}")
            orbit.append(q)
        if len(set(orbit)) != factorial(d):
            raise AssertionError(f"S_{d} does not act freely at {p}")
        seen.update(orbit)
        orbits.append(sorted(set(orbit)))
    return orbits


@dataclass
class OrbitHarmonicsReport:
    n: int
    k: int
    d: int
    alpha: tuple
    gens_vanish: bool
    locus_dimension: int
    ideal_equal: bool
    standard_monomials_match: bool
    dimension: int
    expected: int
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return (self.gens_vanish and self.ideal_equal and self.standard_monomials_match
                and self.dimension == self.expected and self.locus_dimension == self.expected)

    def to_json(self) -> dict:
        return {"ideal_equal": self.ideal_equal, "standard_monomials_match": self.standard_monomials_match,
                "dimension": self.dimension, "expected": self.expected, "elapsed_ms": self.elapsed_ms,
                "gens_vanish": self.gens_vanish, "locus_dimension": self.locus_dimension,
                "alpha": [str(a) for a in self.alpha]}


def vanishing_check(spec: LocusSpec) -> tuple:
    """(every generator vanishes on every point, dim of the quotient by the generators, point count)."""
    points = enumerate_points(spec)
    gens = locus_ideal_gens(spec)
    u = spec.universe
    vanish = all(evaluate(g, dict(enumerate(p))) == 0 for g in gens for p in points)
    gb = buchberger(gens, GRLEX)
    return vanish, quotient_dimension(gb), len(points), gb


def verify_orbit_harmonics(n: int, k: int, d: int, alpha: Sequence | None = None) -> OrbitHarmonicsReport:
    from .presentations import basis_A_exponents, jq_gens

    start = time.perf_counter()
    spec = LocusSpec(n, k, d, tuple(alpha) if alpha is not None else default_alpha(k))
    vanish, locus_dim, npoints, gb_locus = vanishing_check(spec)
    if gb_locus.is_unit_ideal():
        raise ValueError("locus ideal is the whole ring")
    graded = [top_form(g) for g in gb_locus.generators]
    jq = jq_gens(n, k, d)
    gb_graded = buchberger(graded, GRLEX)
    gb_jq_grlex = buchberger(jq, GRLEX)
    equal = gb_graded == gb_jq_grlex
    gb_jq = buchberger(jq, LEX)
    std = standard_monomials(gb_jq)
    expected_std = sorted(basis_A_exponents(n, k, d), key=lambda m: (sum(m), m))
    expected = point_count(n, k, d)
    elapsed = int((time.perf_counter() - start) * 1000)
    return OrbitHarmonicsReport(n, k, d, spec.alpha, vanish, locus_dim if isinstance(locus_dim, int) else -1,
                                equal, std == expected_std, len(std), expected, elapsed)
