"""Sparse multivariate polynomials with exact rational coefficients.

Monomials are plain tuples of exponents indexed by a VarUniverse, whose
variables are ordered x1 > ... > xn > y1 > ... > yd > t1 > ... > tk.
With that indexing, lex comparison of monomials is ordinary tuple comparison.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Union

Monomial = tuple
Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class VarUniverse:
    n: int
    d: int = 0
    k: int = 0

    def __post_init__(self):
        if min(self.n, self.d, self.k) < 0:
            raise ValueError("variable counts must be nonnegative")

    @property
    def nvars(self) -> int:
        return self.n + self.d + self.k

    @cached_property
    def names(self) -> tuple:
        return (tuple(f"x{i}" for i in range(1, self.n + 1))
                + tuple(f"y{i}" for i in range(1, self.d + 1))
                + tuple(f"t{i}" for i in range(1, self.k + 1)))

    @cached_property
    def _index(self) -> dict:
        return {name: i for i, name in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} in {self}") from None

    # 1-based block accessors returning variable indices
    def xi(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"x{i} out of range")
        return i - 1

    def yi(self, i: int) -> int:
        if not 1 <= i <= self.d:
            raise IndexError(f"y{i} out of range")
        return self.n + i - 1

    def ti(self, i: int) -> int:
        if not 1 <= i <= self.k:
            raise IndexError(f"t{i} out of range")
        return self.n + self.d + i - 1

    @property
    def x_indices(self) -> range:
        return range(0, self.n)

    @property
    def y_indices(self) -> range:
        return range(self.n, self.n + self.d)

    @property
    def t_indices(self) -> range:
        return range(self.n + self.d, self.nvars)

    def unit(self) -> Monomial:
        return (0,) * self.nvars

    def var_monomial(self, idx: int, power: int = 1) -> Monomial:
        e = [0] * self.nvars
        e[idx] = power
        return tuple(e)

    def var(self, name_or_index) -> "Polynomial":
        idx = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        return Polynomial(self, {self.var_monomial(idx): Fraction(1)})

    def x(self) -> list:
        return [self.var(i) for i in self.x_indices]

    def y(self) -> list:
        return [self.var(i) for i in self.y_indices]

    def t(self) -> list:
        return [self.var(i) for i in self.t_indices]

    def const(self, c: Scalar) -> "Polynomial":
        return Polynomial.constant(self, c)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial.constant(self, 1)

    def monomial_text(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(i + j for i, j in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a divides b."""
    return all(i <= j for i, j in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(j - i for i, j in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(i, j) for i, j in zip(a, b))


def mono_degree(m: Monomial) -> int:
    return sum(m)


@dataclass(frozen=True)
class TermOrder:
    kind: str = "lex"

    def __post_init__(self):
        if self.kind not in ("lex", "grlex"):
            raise ValueError(f"unknown term order {self.kind!r}; use 'lex' or 'grlex'")

    @property
    def graded(self) -> bool:
        return self.kind == "grlex"

    def key(self, m: Monomial):
        if self.kind == "lex":
            return m
        return (sum(m), m)

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


LEX = TermOrder("lex")
GRLEX = TermOrder("grlex")


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"coefficient must be int, Fraction or str, got {type(c).__name__}")


class Polynomial:
    """Immutable sparse polynomial; `terms` maps exponent tuples to nonzero Fractions."""

    __slots__ = ("universe", "terms", "_hash")

    def __init__(self, universe: VarUniverse, terms: Mapping | None = None, *, _trusted: bool = False):
        self.universe = universe
        if _trusted:
            self.terms = terms
        else:
            clean = {}
            nv = universe.nvars
            for m, c in (terms or {}).items():
                m = tuple(m)
                if len(m) != nv or any(e < 0 for e in m):
                    raise ValueError(f"bad exponent vector {m} for {universe}")
                c = _frac(c)
                if c:
                    clean[m] = clean.get(m, 0) + c
            self.terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def constant(cls, universe: VarUniverse, c: Scalar) -> "Polynomial":
        c = _frac(c)
        return cls(universe, {universe.unit(): c} if c else {}, _trusted=True)

    @classmethod
    def monomial(cls, universe: VarUniverse, m: Monomial, c: Scalar = 1) -> "Polynomial":
        return cls(universe, {tuple(m): c})

    # -- basic predicates ------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.universe == other.universe and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({self.universe.unit(): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.universe, frozenset(self.terms.items())))
        return self._hash

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.universe.unit() in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get(self.universe.unit(), Fraction(0))

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def variables(self) -> set:
        """Indices of variables that occur."""
        out = set()
        for m in self.terms:
            out.update(i for i, e in enumerate(m) if e)
        return out

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.universe != self.universe:
                raise ValueError(f"universe mismatch: {self.universe} vs {other.universe}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.universe, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.universe, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.universe, {m: -c for m, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c: Scalar) -> "Polynomial":
        c = _frac(c)
        if not c:
            return self.universe.zero()
        return Polynomial(self.universe, {m: v * c for m, v in self.terms.items()}, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(i + j for i, j in zip(ma, mb))
                out[m] = get(m, 0) + ca * cb
        return Polynomial(self.universe, {m: c for m, c in out.items() if c}, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = self.universe.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def mul_monomial(self, m: Monomial, c: Scalar = 1) -> "Polynomial":
        c = _frac(c)
        return Polynomial(self.universe, {mono_mul(k, m): v * c for k, v in self.terms.items()}, _trusted=True)

    # -- orders ----------------------------------------------------------
    def leading_monomial(self, order: TermOrder = LEX) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: TermOrder = LEX) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def sorted_terms(self, order: TermOrder = LEX) -> list:
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def monic(self, order: TermOrder = LEX) -> "Polynomial":
        return self.scale(1 / self.leading_coefficient(order))

    # -- conversion ------------------------------------------------------
    def to_text(self, order: TermOrder = LEX) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms(order)):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = self.universe.monomial_text(m)
            if mono == "1":
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if i == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"

    def to_json(self, order: TermOrder = LEX) -> dict:
        u = self.universe
        return {"terms": [{"c": str(c), "e": list(m)} for m, c in self.sorted_terms(order)],
                "vars": {"n": u.n, "d": u.d, "k": u.k}}

    @classmethod
    def from_json(cls, data: dict) -> "Polynomial":
        v = data["vars"]
        u = VarUniverse(v["n"], v.get("d", 0), v.get("k", 0))
        return cls(u, {tuple(t["e"]): Fraction(t["c"]) for t in data["terms"]})


def top_form(f: Polynomial) -> Polynomial:
    if not f.terms:
        raise ValueError("zero polynomial has no top form")
    top = f.degree()
    return Polynomial(f.universe, {m: c for m, c in f.terms.items() if sum(m) == top}, _trusted=True)


def leading_monomial(f: Polynomial, order: TermOrder = LEX) -> Monomial:
    return f.leading_monomial(order)


def _point_vector(f: Polynomial, point: Mapping) -> list:
    u = f.universe
    vals = [None] * u.nvars
    for key, v in point.items():
        idx = key if isinstance(key, int) else u.index(key)
        vals[idx] = _frac(v)
    for idx in sorted(f.variables()):
        if vals[idx] is None:
            raise KeyError(f"no value assigned to variable {u.names[idx]}")
    return vals


def evaluate(f: Polynomial, point: Mapping) -> Fraction:
    """Exact value at `point`, a map from variable name or index to a rational."""
    vals = _point_vector(f, point)
    total = Fraction(0)
    for m, c in f.terms.items():
        v = c
        for i, e in enumerate(m):
            if e:
                v *= vals[i] ** e
        total += v
    return total


def substitute(f: Polynomial, subst: Mapping, target: VarUniverse | None = None) -> Polynomial:
    """Ring homomorphism sending each variable to a polynomial.

    `subst` maps variable names or indices to Polynomials (or scalars) in
    `target` (default: f's universe). Unmapped variables must exist in the
    target universe under the same name and are sent to themselves.
    """
    u = f.universe
    target = target or u
    images = [None] * u.nvars
    for key, v in subst.items():
        idx = key if isinstance(key, int) else u.index(key)
        images[idx] = v if isinstance(v, Polynomial) else Polynomial.constant(target, v)
    used = f.variables()
    for idx in used:
        if images[idx] is None:
            images[idx] = target.var(u.names[idx])
    powers: dict = {}

    def power(idx: int, e: int) -> Polynomial:
        key = (idx, e)
        if key not in powers:
            powers[key] = images[idx] if e == 1 else power(idx, e - 1) * images[idx]
        return powers[key]

    acc: dict = {}
    for m, c in f.terms.items():
        term = Polynomial.constant(target, c)
        for idx, e in enumerate(m):
            if e:
                term = term * power(idx, e)
        for mm, cc in term.terms.items():
            acc[mm] = acc.get(mm, 0) + cc
    return Polynomial(target, {m: c for m, c in acc.items() if c}, _trusted=True)


def permute_variables(f: Polynomial, perm: Mapping[int, int]) -> Polynomial:
    """Rename variables by index: variable i becomes variable perm[i] (a bijection on indices)."""
    nv = f.universe.nvars
    target = list(range(nv))
    for i, j in perm.items():
        target[i] = j
    out = {}
    for m, c in f.terms.items():
        e = [0] * nv
        for i, a in enumerate(m):
            if a:
                e[target[i]] += a
        out[tuple(e)] = c
    return Polynomial(f.universe, out, _trusted=True)


def is_integer_polynomial(f: Polynomial) -> bool:
    return all(c.denominator == 1 for c in f.terms.values())


def embed(f: Polynomial, target: VarUniverse) -> Polynomial:
    """Move f into a larger universe, matching variables by name."""
    u = f.universe
    pos = [target.index(name) for name in u.names]
    out = {}
    for m, c in f.terms.items():
        e = [0] * target.nvars
        for i, a in enumerate(m):
            if a:
                e[pos[i]] = a
        out[tuple(e)] = c
    return Polynomial(target, out, _trusted=True)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR_RE = re.compile(r"^([xyt]\d+)(?:\^(\d+))?$")


def parse_polynomial(text: str, universe: VarUniverse) -> Polynomial:
    """Parse the canonical text form, e.g. "x1^2*y1 - 3/2*t1 + 1"."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return universe.zero()
    acc = universe.zero()
    pos = 0
    while pos < len(s):
        match = _TERM_RE.match(s, pos)
        if not match or match.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, body = match.group(1), match.group(2).strip()
        if pos > 0 and sign is None:
            raise ValueError(f"missing operator near {s[pos:]!r}")
        coeff = Fraction(1)
        mono = [0] * universe.nvars
        for factor in body.split("*"):
            factor = factor.strip()
            fm = _FACTOR_RE.match(factor)
            if fm:
                mono[universe.index(fm.group(1))] += int(fm.group(2) or 1)
            else:
                try:
                    coeff *= Fraction(factor)
                except (ValueError, ZeroDivisionError):
                    raise ValueError(f"bad factor {factor!r}") from None
        if sign == "-":
            coeff = -coeff
        acc = acc + Polynomial(universe, {tuple(mono): coeff})
        pos = match.end()
    return acc


def sum_polys(universe: VarUniverse, polys: Iterable[Polynomial]) -> Polynomial:
    acc: dict = {}
    for p in polys:
        for m, c in p.terms.items():
            acc[m] = acc.get(m, 0) + c
    return Polynomial(universe, {m: c for m, c in acc.items() if c}, _trusted=True)
