import json
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import polynomials
from spanline.exact_poly import GRLEX, LEX, Polynomial, VarUniverse, parse_polynomial
from spanline.groebner import (
    GroebnerBasis, InfiniteDimension, associated_graded, audit, buchberger, hilbert_series, ideal_equal,
    quotient_dimension, s_polynomial, standard_monomials,
)

U3 = VarUniverse(3)


def P(text, u=U3):
    return parse_polynomial(text, u)


def to_sympy(f: Polynomial, syms):
    expr = sympy.Integer(0)
    for m, c in f.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(syms, m):
            term *= s ** e
        expr += term
    return expr


def sympy_reduced(gens, order):
    u = gens[0].universe
    syms = sympy.symbols(" ".join(u.names))
    syms = syms if isinstance(syms, tuple) else (syms,)
    G = sympy.groebner([to_sympy(g, syms) for g in gens], *syms, order=order.kind)
    out = []
    for g in G.exprs:
        poly = sympy.Poly(g, *syms)
        lc = poly.coeffs(order=order.kind)[0]
        terms = {m: Fraction(int(sympy.fraction(c / lc)[0]), int(sympy.fraction(c / lc)[1]))
                 for m, c in zip(poly.monoms(), poly.coeffs())}
        out.append(Polynomial(u, terms))
    return out


def same_basis(gb: GroebnerBasis, oracle: list) -> bool:
    return sorted(map(str, gb.generators)) == sorted(map(str, oracle))


CASES = [
    ["x1^2 + x2*x3 - 1", "x1*x2 - x3", "x2^2 - x1*x3"],
    ["x1^3 - 2*x1*x2", "x1^2*x2 - 2*x2^2 + x1"],
    ["x1 + x2 + x3", "x1*x2 + x1*x3 + x2*x3", "x1*x2*x3"],
    ["x1^2 - x2", "x1^3 - x3"],
    ["3*x1*x2 - 1/2*x3^2", "x2^3 - x1", "x1*x3 + 2"],
]


@pytest.mark.parametrize("order", [LEX, GRLEX], ids=["lex", "grlex"])
@pytest.mark.parametrize("case", range(len(CASES)))
def test_buchberger_matches_sympy(case, order):
    gens = [P(t) for t in CASES[case]]
    gb = buchberger(gens, order)
    assert same_basis(gb, sympy_reduced(gens, order))
    assert audit(gb)


def test_symmetric_coinvariants():
    gb = buchberger([P(t) for t in CASES[2]], LEX)
    assert [str(g) for g in gb.generators] == ["x1 + x2 + x3", "x2^2 + x2*x3 + x3^2", "x3^3"]
    assert quotient_dimension(gb) == 6
    assert hilbert_series(gb) == (1, 2, 2, 1)


def test_unit_ideal():
    gb = buchberger([P("x1"), P("x1 - 1")], LEX)
    assert gb.is_unit_ideal()
    assert quotient_dimension(gb) == 0
    with pytest.raises(ValueError, match="whole ring"):
        associated_graded([P("x1"), P("x1 - 1")])


def test_infinite_quotient():
    gb = buchberger([P("x1^2"), P("x2^3")], LEX)
    dim = quotient_dimension(gb)
    assert isinstance(dim, InfiniteDimension)
    assert dim.free_vars == ("x3",)
    with pytest.raises(ValueError):
        standard_monomials(gb)
    assert len(standard_monomials(gb, max_degree=1)) == 4
    assert standard_monomials(gb, variables=[0, 1]) == sorted(
        [(a, b, 0) for a in range(2) for b in range(3)], key=lambda m: (sum(m), m))


def test_associated_graded_points():
    # vanishing ideal of {0, 1, 2} on a line: gr is (x1^3)
    u = VarUniverse(1)
    top = associated_graded([P("x1^3 - 3*x1^2 + 2*x1", u)])
    assert top == [P("x1^3", u)]


def test_ideal_equal():
    a = [P("x1 + x2"), P("x2^2")]
    b = [P("x1 + x2 + x2^2"), P("x2^2")]
    assert ideal_equal(a, b)
    assert not ideal_equal(a, [P("x1"), P("x2^2")])


def test_normal_form_and_contains():
    gb = buchberger([P("x1^2 - x2"), P("x2^2 - x3")], LEX)
    assert gb.normal_form(P("x1^4")) == P("x3")
    assert gb.contains(P("x1^4 - x3"))
    with pytest.raises(ValueError):
        gb.normal_form(P("x1", VarUniverse(2)))


def test_s_polynomial():
    f, g = P("x1^2 + x2"), P("x1*x2 + 1")
    assert s_polynomial(f, g, LEX) == P("x2^2 - x1")


def test_json_round_trip():
    gb = buchberger([P(t) for t in CASES[0]], GRLEX)
    again = GroebnerBasis.from_json(json.loads(json.dumps(gb.to_json())))
    assert again == gb


def test_errors():
    with pytest.raises(ValueError):
        buchberger([])
    with pytest.raises(ValueError):
        buchberger([U3.zero()])
    with pytest.raises(ValueError):
        buchberger([P("x1"), P("x1", VarUniverse(2))])


def test_audit_detects_non_basis():
    bogus = GroebnerBasis(U3, LEX, [P("x1^2 - x2"), P("x1*x2 - 1")])
    assert not audit(bogus)


SMALL3 = VarUniverse(3)


@given(st.lists(polynomials(SMALL3, max_exp=2, max_terms=3), min_size=1, max_size=3),
       st.sampled_from([LEX, GRLEX]))
def test_buchberger_audit_property(gens, order):
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return
    gb = buchberger(gens, order)
    assert audit(gb)
    for g in gens:
        assert gb.contains(g)
    for g in gb.generators:
        assert g.leading_coefficient(order) == 1


@given(st.lists(polynomials(VarUniverse(2), max_exp=2, max_terms=3), min_size=1, max_size=3))
def test_buchberger_matches_sympy_property(gens):
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return
    assert same_basis(buchberger(gens, LEX), sympy_reduced(gens, LEX))
