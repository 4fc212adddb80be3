"""The twelve acceptance criteria, exact equality throughout; one summary line per criterion."""
import time
from math import factorial

import pytest

from conftest import ACCEPTANCE_LINES
from spanline.cli import ACCEPTANCE_SUITE, INTEGRALITY_SUITE
from spanline.combin import Word, convexify, falling, standardize_convex, stirling2, words
from spanline.exact_poly import VarUniverse, parse_polynomial
from spanline.gkm import verify_divisibility, verify_injectivity, verify_kills_ideal
from spanline.loci import LocusSpec, default_alpha, enumerate_points, random_alpha, vanishing_check, verify_orbit_harmonics
from spanline.presentations import (
    CtCoordinates, basis_A, basis_C, hilbert_factorization, jqt_groebner, rank, verify_At_freeness, verify_collapse,
    verify_h_integrality, verify_integrality, verify_invariant_quotient,
)
from spanline.schubert import verify_representatives

SEED = 17


def record(number, title, failures, elapsed, note=""):
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {number:>2} {title:<34} {status}  ({elapsed:.2f} s){'  ' + note if note else ''}"
    if failures:
        line += f"  failures={failures}"
    ACCEPTANCE_LINES[number] = line
    print(line)
    assert not failures, line


def test_criterion_01_counting():
    start = time.perf_counter()
    bad = []
    for n, k, d in ACCEPTANCE_SUITE:
        r = falling(k, d) * stirling2(n, d)
        sizes = (len(words(n, k, d)), len(basis_C(n, k, d)), rank(n, k, d))
        pts = (len(enumerate_points(LocusSpec(n, k, d, default_alpha(k)))), len(basis_A(n, k, d)))
        if sizes != (r, r, r) or pts != (factorial(d) * r,) * 2:
            bad.append((n, k, d))
    if rank(3, 3, 2) != 18 or len(enumerate_points(LocusSpec(3, 3, 2, default_alpha(3)))) != 36:
        bad.append("spot values")
    elapsed = time.perf_counter() - start
    if elapsed >= 1:
        bad.append(f"runtime {elapsed:.2f} s")
    record(1, "counting", bad, elapsed, "rank(3,3,2)=18, |Z|=36")


def test_criterion_02_inhomogeneous_locus():
    start = time.perf_counter()
    bad = []
    for n, k, d in ACCEPTANCE_SUITE:
        for alpha in (default_alpha(k), random_alpha(k, SEED)):
            t0 = time.perf_counter()
            vanish, dim, npoints, _ = vanishing_check(LocusSpec(n, k, d, alpha))
            if not (vanish and dim == npoints) or time.perf_counter() - t0 >= 60:
                bad.append((n, k, d, [str(a) for a in alpha]))
    record(2, "locus ideal = vanishing ideal", bad, time.perf_counter() - start)


def test_criterion_03_orbit_harmonics():
    start = time.perf_counter()
    bad = []
    for n, k, d in ACCEPTANCE_SUITE:
        t0 = time.perf_counter()
        rep = verify_orbit_harmonics(n, k, d)
        if not (rep.ideal_equal and rep.standard_monomials_match) or time.perf_counter() - t0 >= 120:
            bad.append((n, k, d))
    record(3, "gr I(Z) = J^Q, std monomials = A", bad, time.perf_counter() - start)


def test_criterion_04_t_ideal():
    start = time.perf_counter()
    bad = [inst for inst in ACCEPTANCE_SUITE if not verify_At_freeness(*inst).ok]
    record(4, "J^{Q,t}: t-free leads, std = A", bad, time.perf_counter() - start)


def test_criterion_05_invariant_quotient():
    start = time.perf_counter()
    bad = []
    for inst in ACCEPTANCE_SUITE:
        rep = verify_invariant_quotient(*inst)
        if not rep.ok or rep.details["invariant_dimension"] != rank(*inst):
            bad.append(inst)
    record(5, "invariants: dim = rank, C basis", bad, time.perf_counter() - start)


def test_criterion_06_integrality():
    start = time.perf_counter()
    bad = [inst for inst in INTEGRALITY_SUITE if not verify_integrality(*inst).ok]
    coords = CtCoordinates(2, 2, 1)
    u = coords.universe
    y1 = u.var(u.yi(1))
    tu = VarUniverse(0, 0, 2)
    got = {coords.C.labels[i]: p for i, p in enumerate(coords.coordinates(y1 * y1))}
    worked = (got[((0, 0), ())] == parse_polynomial("-t1*t2", tu).terms
              and got[((0, 0), (1,))] == parse_polynomial("t1 + t2", tu).terms)
    if not worked:
        bad.append("worked value y1^2")
    record(6, "integral C^t structure constants", bad, time.perf_counter() - start)


def test_criterion_07_h_integrality():
    start = time.perf_counter()
    bad = [inst for inst in ACCEPTANCE_SUITE if inst[2] >= 2 and not verify_h_integrality(*inst).ok]
    record(7, "h-integrality", bad, time.perf_counter() - start)


def test_criterion_08_gkm_injectivity():
    start = time.perf_counter()
    bad = []
    for inst in ACCEPTANCE_SUITE:
        if not verify_kills_ideal(*inst).ok or not verify_injectivity(*inst, seed=SEED).ok:
            bad.append(inst)
    record(8, "restriction kills I, injective", bad, time.perf_counter() - start)


def test_criterion_09_divisibility():
    start = time.perf_counter()
    bad = [inst for inst in ACCEPTANCE_SUITE if inst[0] <= 4 and not verify_divisibility(*inst).ok]
    record(9, "(star)-pair divisibility", bad, time.perf_counter() - start)


def test_criterion_10_schubert():
    start = time.perf_counter()
    bad = [(n, k) for n, k in [(2, 2), (3, 2), (3, 3), (4, 2)] if not verify_representatives(n, k, seed=SEED).ok]
    conv, sigma = convexify(Word((2, 4, 1, 1, 2, 4, 1, 3, 4)))
    triple = (conv.values, sigma, standardize_convex(conv, 4))
    if triple != ((2, 2, 4, 4, 4, 1, 1, 1, 3), (1, 5, 2, 6, 9, 3, 4, 7, 8), (2, 5, 4, 6, 7, 1, 8, 9, 3)):
        bad.append("worked triple")
    record(10, "Schubert representatives basis", bad, time.perf_counter() - start)


def test_criterion_11_hilbert_factorization():
    start = time.perf_counter()
    bad = [inst for inst in ACCEPTANCE_SUITE if not hilbert_factorization(*inst).ok]
    record(11, "Hilbert series factorization", bad, time.perf_counter() - start)


def test_criterion_12_collapse():
    start = time.perf_counter()
    bad = [(n, k) for n, k in [(2, 2), (3, 2), (3, 3)] if not verify_collapse(n, k).ok]
    record(12, "e_r(y) = e_r(t) modulo I_{n,k,k}", bad, time.perf_counter() - start)
