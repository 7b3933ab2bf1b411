"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line; tests/conftest.py prints them in the
terminal summary.  Running this file directly prints the same lines.
"""

import time

import pytest

from weylpleth import verification as V
from weylpleth.branching import branching_coeff
from weylpleth.characters import decompose_schur, weyl_character
from weylpleth.laurent import LaurentPoly, phi_l
from weylpleth.quotient import LeviDatum, compute_quotient, verify_quotient_factorization
from weylpleth.rootsys import dominant_weights, root_system

RESULTS = {}

MU8 = (1, 2, 3, 4, 4, 4, 6, 6)


def record(number, title, ok, detail, seconds, limit):
    ok = ok and seconds < limit
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title} ({detail}; {seconds:.1f}s, limit {limit:g}s)"
    RESULTS[number] = line
    print(line)
    return ok


def components(q):
    return [list(c) for c in q.components]


def test_criterion_01_worked_examples():
    t = time.perf_counter()
    a = compute_quotient("A", 8, MU8, 3)
    c = compute_quotient("C", 8, MU8, 3)
    d = compute_quotient("D", 8, MU8, 3)
    be = compute_quotient("B", 6, (2, 5, 5, 6, 7, 9), 2)
    bo = compute_quotient("B", 6, (1, 5, 5, 6, 7, 9), 3)
    checks = [
        components(a) == [[1, 1], [1, 2, 2], [0, 1, 2]] and a.datum.label() == "GL2xGL3xGL3",
        components(c)[1] == [-2, -2, -1, 0, 1, 2] and c.datum.label() == "Sp4xGL6",
        components(d)[1] == [-2, -1, 0, 1, 1] and d.datum.label() == "SO6xGL5",
        components(be)[1] == [-5, -2, -1, 3, 3, 3] and be.datum.label() == "GL6"
        and be.sign == 1 and be.w0.images == (1, 3, 2, 4, 6, 5),
        components(bo) == [[0, 1], [-2, -2, 3, 3]] and bo.datum.label() == "SO5xGL4"
        and bo.sign == 1,
    ]
    dt = time.perf_counter() - t
    assert record(1, "worked examples", all(checks), f"{sum(checks)}/5 examples", dt, 1)


def test_criterion_02_so4_obstruction():
    t = time.perf_counter()
    x = LaurentPoly.monomial
    d = (LaurentPoly.one(2) - x((-1, 1))) * (LaurentPoly.one(2) - x((1, 1)))
    lhs_ok = phi_l(d, 2) == LaurentPoly.one(2) + x((0, 1))
    rep = verify_quotient_factorization("D", 2, (0, 0), 2)
    ok = lhs_ok and rep.factorizable is False and rep.lhs == phi_l(d, 2)
    assert record(2, "SO4 obstruction", ok, "phi_2 = 1 + x2, not factorizable",
                  time.perf_counter() - t, 1)


def test_criterion_03_delta_identity():
    rep = V.delta_identity_grid(V.root_systems(max_rank=4))
    assert record(3, "denominator identity", rep.passed,
                  f"{rep.checked} root systems", rep.seconds, 10)


def test_criterion_04_plethysm_duality():
    rep = V.duality_grid(V.root_systems(max_rank=4), max_size=6, ells=(1, 2, 3, 5), extra=4)
    assert record(4, "plethysm duality", rep.passed,
                  f"{rep.checked} (mu, ell) pairs, {len(rep.failures)} failures",
                  rep.seconds, 600)


def test_criterion_05_branching_oracle():
    rep = V.branching_grid(V.root_systems(max_rank=4), max_size=6, ells=(1, 2, 3, 5),
                           lam_size=6)
    assert record(5, "branching vs restriction", rep.passed,
                  f"{rep.checked} coefficients, {len(rep.failures)} failures",
                  rep.seconds, 600)


def test_criterion_06_type_a_littlewood_richardson():
    t = time.perf_counter()
    rs = root_system("A", 3)
    datum = LeviDatum("A", 3, (1,), ((2, 3),))
    checked, bad = 0, 0
    for a in range(5):
        for b in range(4):
            for c in range(b, 4):
                lr = decompose_schur(rs, weyl_character(rs, (0, 0, a))
                                     * weyl_character(rs, (0, b, c)))
                for lam in dominant_weights(rs, a + b + c, exact=True):
                    checked += 1
                    bad += branching_coeff(rs, lam, datum, (a, b, c)) != lr.get(lam, 0)
    assert record(6, "GL3 to GL1 x GL2", not bad, f"{checked} coefficients",
                  time.perf_counter() - t, 10)


def test_criterion_07_lusztig_q():
    rep = V.lusztig_grid(V.root_systems(max_rank=4), max_size=6)
    assert record(7, "Lusztig q-analogue", rep.passed,
                  f"{rep.checked} pairs, {len(rep.failures)} failures", rep.seconds, 60)


def test_criterion_08_hecke_endpoint():
    rep = V.hecke_endpoint_grid("C", 2, 5, max_size=2, max_length=24)
    total = rep.checked + rep.skipped
    assert record(8, "parabolic KL = K(q) for C2, ell=5", rep.passed and rep.checked > 0,
                  f"computable subset {rep.checked}/{total}", rep.seconds, 1800)


def test_criterion_09_duality_at_q_one():
    rep = V.hecke_duality_grid("BC", 2, 3, mu_size=6, lam_size=3, max_length=20)
    total = rep.checked + rep.skipped
    assert record(9, "parabolic KL at q=1 vs branching, B2/C2, ell=3",
                  rep.passed and rep.checked > 0,
                  f"computable subset {rep.checked}/{total}", rep.seconds, 1800)


def test_criterion_10_interpolation_endpoints():
    h = V.h_one_grid(V.root_systems(max_rank=2), max_size=2, bound=2, max_length=18)
    r = V.regularity_grid(V.root_systems(max_rank=3), samples=100)
    assert record(10, "H at ell=1 and regularity", h.passed and r.passed,
                  f"{h.checked} H checks, {r.checked} regularity samples",
                  h.seconds + r.seconds, 60)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
