import itertools
from fractions import Fraction

import pytest

from spanline.exact_poly import LEX, VarUniverse, evaluate, parse_polynomial, substitute
from spanline.groebner import buchberger, quotient_dimension
from spanline.loci import (
    LocusSpec, default_alpha, enumerate_points, family_ideal_gens, family_points_membership,
    locus_ideal_gens, orbit_partition, point_count, random_alpha, vanishing_check, verify_orbit_harmonics,
)
from spanline.symfun import complete

# The 36 points of Z_{3,3,2}(alpha), transcribed row by row as alpha indices "xxx;yy".
LISTED_Z332 = """
112;12 121;12 211;12 122;12 212;12 221;12
112;21 121;21 211;21 122;21 212;21 221;21
113;13 131;13 311;13 133;13 313;13 331;13
113;31 131;31 311;31 133;31 313;31 331;31
223;23 232;23 322;23 233;23 323;23 332;23
223;32 232;32 322;32 233;32 323;32 332;32
""".split()


def test_points_332_match_listing():
    alpha = (Fraction(7), Fraction(-2), Fraction(1, 3))
    expected = sorted(tuple(alpha[int(c) - 1] for c in p.replace(";", "")) for p in LISTED_Z332)
    assert enumerate_points(LocusSpec(3, 3, 2, alpha)) == expected
    assert len(expected) == 36


def test_points_small():
    assert enumerate_points(LocusSpec(1, 1, 1, (5,))) == [(5, 5)]
    assert enumerate_points(LocusSpec(2, 2, 1, (1, 2))) == [(1, 1, 1), (2, 2, 2)]


def test_point_count_formula():
    for n, k, d in [(2, 2, 1), (3, 3, 2), (4, 3, 3), (4, 3, 2), (5, 3, 2)]:
        assert len(enumerate_points(LocusSpec(n, k, d, default_alpha(k)))) == point_count(n, k, d)


def test_spec_validation():
    with pytest.raises(ValueError):
        LocusSpec(3, 3, 2, (1, 1, 2))
    with pytest.raises(ValueError):
        LocusSpec(3, 3, 2, (1, 2))
    with pytest.raises(ValueError):
        LocusSpec(2, 3, 2)
    with pytest.raises(ValueError):
        LocusSpec(3, 2, 3)
    with pytest.raises(ValueError):
        enumerate_points(LocusSpec(3, 3, 2))


def test_random_alpha_seeded():
    a = random_alpha(4, 5)
    assert a == random_alpha(4, 5)
    assert len(set(a)) == 4


def test_trivial_generators():
    u = VarUniverse(1, 1)
    gens = locus_ideal_gens(LocusSpec(1, 1, 1, (5,)))
    assert parse_polynomial("5 - y1", u) in gens
    assert parse_polynomial("x1 - y1", u) in gens


def test_generators_vanish_and_cut_out_points():
    for n, k, d in [(3, 3, 2), (3, 2, 2), (2, 2, 1)]:
        vanish, dim, npoints, _ = vanishing_check(LocusSpec(n, k, d, default_alpha(k)))
        assert vanish and dim == npoints == point_count(n, k, d)


def test_truncated_family_recurrence():
    # generators with r beyond the truncated range lie in the ideal
    spec = LocusSpec(3, 3, 2, (1, 2, 3))
    u = spec.universe
    gb = buchberger(locus_ideal_gens(spec), LEX)
    e = [Fraction(1), Fraction(6), Fraction(11), Fraction(6)]
    ys = list(u.y_indices)
    for r in range(4, 7):
        g = u.zero()
        for b in range(r + 1):
            a = r - b
            coeff = e[a] if a < len(e) else Fraction(0)
            g = g + complete(b, ys, u).scale(coeff * (-1) ** b)
        assert gb.contains(g)


def test_family_specializes_to_locus():
    for n, k, d in [(3, 3, 2), (4, 3, 2), (2, 2, 2)]:
        for alpha in (default_alpha(k), random_alpha(k, 3)):
            fam = family_ideal_gens(n, k, d)
            u = fam[0].universe
            target = VarUniverse(n, d, 0)
            subst = {u.xi(i): target.var(target.xi(i)) for i in range(1, n + 1)}
            subst.update({u.yi(j): target.var(target.yi(j)) for j in range(1, d + 1)})
            subst.update({u.ti(j): target.const(alpha[j - 1]) for j in range(1, k + 1)})
            special = [substitute(g, subst, target) for g in fam]
            assert special == locus_ideal_gens(LocusSpec(n, k, d, alpha))


def test_family_at_t_zero_is_jq_up_to_sign():
    from spanline.presentations import jq_gens
    for n, k, d in [(3, 3, 2), (4, 3, 2)]:
        fam = family_ideal_gens(n, k, d)
        u = fam[0].universe
        target = VarUniverse(n, d, 0)
        subst = {u.xi(i): target.var(target.xi(i)) for i in range(1, n + 1)}
        subst.update({u.yi(j): target.var(target.yi(j)) for j in range(1, d + 1)})
        subst.update({u.ti(j): target.zero() for j in range(1, k + 1)})
        special = [substitute(g, subst, target) for g in fam]
        jq = jq_gens(n, k, d)
        assert len(special) == len(jq)
        assert all(a == b or a == -b for a, b in zip(special, jq))


def test_family_d_equals_k_matches_product_form():
    # after eliminating y, the family for d = k contains prod_j (x_i - t_j)
    n, k = 3, 2
    gb = buchberger(family_ideal_gens(n, k, k), LEX)
    u = gb.universe
    for i in range(1, n + 1):
        prod = u.one()
        for j in range(1, k + 1):
            prod = prod * (u.var(u.xi(i)) - u.var(u.ti(j)))
        assert gb.contains(prod)


def test_family_points_membership():
    n, k, d = 3, 3, 2
    alpha = (Fraction(1), Fraction(4), Fraction(9))
    for p in enumerate_points(LocusSpec(n, k, d, alpha)):
        assert family_points_membership(p + alpha, n, k, d)
    assert family_points_membership((0,) * (n + d + k), n, k, d)
    assert not family_points_membership((1, 1, 1, 1, 4) + alpha, n, k, d)
    assert not family_points_membership((1, 4, 1, 1, 2) + alpha, n, k, d)
    with pytest.raises(ValueError):
        family_points_membership((1, 2), n, k, d)


def test_family_vanishes_on_family_points():
    n, k, d = 3, 2, 2
    fam = family_ideal_gens(n, k, d)
    alpha = (Fraction(3), Fraction(-1))
    for p in enumerate_points(LocusSpec(n, k, d, alpha)):
        z = dict(enumerate(p + alpha))
        assert all(evaluate(g, z) == 0 for g in fam)


def test_orbits_free():
    for n, k, d in [(3, 3, 2), (4, 3, 3), (3, 2, 1)]:
        pts = enumerate_points(LocusSpec(n, k, d, default_alpha(k)))
        orbits = orbit_partition(pts, n, d)
        assert len(orbits) * len(list(itertools.permutations(range(d)))) == len(pts)


def test_orbit_harmonics_examples():
    r = verify_orbit_harmonics(3, 3, 2)
    assert r.ok and r.dimension == 36
    r = verify_orbit_harmonics(2, 2, 2, (1, 2))
    assert r.ok and r.dimension == 4
    r = verify_orbit_harmonics(4, 1, 1)
    assert r.ok and r.dimension == 1
