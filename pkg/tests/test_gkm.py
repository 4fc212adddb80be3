from fractions import Fraction

import pytest
import sympy

from spanline.combin import Word, words
from spanline.exact_poly import VarUniverse, parse_polynomial, substitute
from spanline.gkm import (
    divides_by_difference, exploratory_gkm_dimensions, restrict_at_word, restriction_matrix, seeded_point,
    star_pairs, t_universe, verify_divisibility, verify_injectivity, verify_kills_ideal,
)
from spanline.linalg import det
from spanline.presentations import InvariantElement, rank
from spanline.symfun import elementary

from test_groebner import to_sympy

T3 = t_universe(3)


def test_restrict_examples():
    u = VarUniverse(3, 2)
    w = Word((1, 1, 2))
    assert restrict_at_word(u.var(u.xi(1)), w, 3) == T3.var(T3.ti(1))
    e1 = elementary(1, list(u.y_indices), u)
    assert restrict_at_word(e1, w, 3) == parse_polynomial("t1 + t2", T3)
    assert restrict_at_word(u.one(), Word((3, 1, 3)), 3) == T3.one()
    assert restrict_at_word(InvariantElement.from_polynomial(e1), w, 3) == parse_polynomial("t1 + t2", T3)


def test_restrict_errors():
    u = VarUniverse(3, 2)
    with pytest.raises(ValueError, match="invariants"):
        restrict_at_word(u.var(u.yi(1)), Word((1, 1, 2)), 3)
    with pytest.raises(ValueError):
        restrict_at_word(u.one(), Word((1, 1)), 3)
    with pytest.raises(ValueError):
        restrict_at_word(u.one(), Word((1, 1, 4)), 3)
    with pytest.raises(ValueError):
        restrict_at_word(u.one(), Word((1, 1, 1)), 3)


def test_restriction_matrix_221():
    mat = restriction_matrix(2, 2, 1)
    t = t_universe(2)
    rows = {str(w): row for w, row in zip(mat.rows, mat.entries)}
    assert rows[str(Word((1, 1)))] == [t.one(), t.var(t.ti(1))]
    assert rows[str(Word((2, 2)))] == [t.one(), t.var(t.ti(2))]
    assert det(mat.specialize((1, 2))) == 1


def test_restriction_matrix_square():
    for n, k, d in [(3, 3, 2), (3, 2, 2), (4, 3, 2)]:
        mat = restriction_matrix(n, k, d)
        assert len(mat.rows) == len(mat.columns) == rank(n, k, d)


def test_injectivity_examples():
    assert verify_injectivity(3, 3, 2).ok
    r = verify_injectivity(3, 1, 1)
    assert r.ok and r.details["size"] == 1 and r.details["determinant"] == "1"


def test_injectivity_symbolic_oracle():
    """Full symbolic determinant with sympy for a small instance; must be a nonzero polynomial."""
    mat = restriction_matrix(3, 2, 2)
    syms = sympy.symbols("t1 t2")
    M = sympy.Matrix([[to_sympy(e, syms) for e in row] for row in mat.entries])
    D = sympy.factor(M.det())
    assert D != 0
    pt = seeded_point(2, 17)
    assert sympy.Rational(str(det(mat.specialize(pt)))) == D.subs(dict(zip(syms, [sympy.Rational(str(a)) for a in pt])))


def test_seeded_point_distinct():
    p = seeded_point(5, 3)
    assert p == seeded_point(5, 3) and len(set(p)) == 5


def test_kills_ideal():
    for inst in [(2, 2, 1), (3, 3, 2), (4, 2, 2)]:
        assert verify_kills_ideal(*inst).ok


def test_star_pairs_examples():
    pairs = star_pairs(3, 3, 2)
    match = [p for p in pairs if p[0] == Word((1, 1, 2)) and p[1] == Word((3, 3, 2))]
    assert match == [(Word((1, 1, 2)), Word((3, 3, 2)), frozenset({1, 2}), 1, 3)]
    assert all(p[0] != p[1] and p[3] != p[4] for p in pairs)
    two = star_pairs(2, 2, 2)
    assert not [p for p in two if p[0] == Word((1, 2)) and p[1] == Word((2, 1))]


def test_star_pairs_brute_force():
    """Witness search over all subsets I and letters j1, j2."""
    import itertools
    n, k, d = 3, 3, 2
    ws = words(n, k, d)
    expected = set()
    for w1, w2 in itertools.product(ws, ws):
        for size in range(1, n + 1):
            for I in itertools.combinations(range(n), size):
                for j1, j2 in itertools.permutations(range(1, k + 1), 2):
                    if all(w1[i] == j1 and w2[i] == j2 for i in I) and all(
                            w1[i] == w2[i] for i in range(n) if i not in I):
                        expected.add((w1, w2, frozenset(i + 1 for i in I), j1, j2))
    assert set(star_pairs(n, k, d)) == expected


def test_divides_by_difference_oracle():
    t = t_universe(3)
    cases = ["t1^2 - t2^2", "t1*t3 - t2*t3 + 1", "t1^3 - t2^3 + t3*t1 - t3*t2", "t1 + t2"]
    for text in cases:
        f = parse_polynomial(text, t)
        collapsed = substitute(f, {t.ti(1): t.var(t.ti(2))})
        assert divides_by_difference(f, 1, 2) == collapsed.is_zero()


def test_divisibility():
    r = verify_divisibility(3, 3, 2)
    assert r.ok and r.details["basis_size"] == 18
    assert verify_divisibility(2, 2, 1).ok


def test_exploratory_dimensions():
    small = exploratory_gkm_dimensions(2, 2, 1, 3)
    assert all(v["divisibility_module"] == v["image"] for v in small.values())
    bigger = exploratory_gkm_dimensions(3, 2, 2, 1)
    assert bigger[1] == {"divisibility_module": 7, "image": 5}
