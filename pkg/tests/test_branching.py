import pytest
from hypothesis import given, settings, strategies as st

from weylpleth.branching import (branching_coeff, complement_roots, kostant_partition,
                                 kostant_partition_q, levi_character, lusztig_q,
                                 restrict_character_oracle, s_mu_I_truncated)
from weylpleth.characters import (decompose_schur, phi_plethysm_truncated, weight_multiplicity,
                                  weyl_character, weyl_dimension)
from weylpleth.laurent import QPoly
from weylpleth.quotient import LeviDatum, compute_quotient
from weylpleth.rootsys import dominant_weights, root_system
from weylpleth.verification import full_datum, levi_data, torus_datum

SYSTEMS = [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 2), ("D", 3)]


def test_partition_function_examples():
    a3 = root_system("A", 3)
    assert kostant_partition(a3.positive_roots, (0, 0, 0)) == 1
    assert kostant_partition(a3.positive_roots, (-1, 1, 0)) == 1
    c2 = root_system("C", 2)
    # e1 + e2 itself, or (e2 - e1) + 2 e1
    assert kostant_partition(c2.positive_roots, (1, 1)) == 2
    assert kostant_partition_q(c2.positive_roots, (1, 1)) == QPoly([0, 1, 1])


def test_partition_function_rejects_negative_arguments():
    c2 = root_system("C", 2)
    assert kostant_partition(c2.positive_roots, (-1, 0)) == 0
    assert kostant_partition(c2.positive_roots, (1, 0)) == 0


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(SYSTEMS), st.data())
def test_partition_function_q_at_one(system, data):
    rs = root_system(*system)
    gamma = tuple(data.draw(st.lists(st.integers(-3, 4), min_size=rs.rank, max_size=rs.rank)))
    assert kostant_partition_q(rs.positive_roots, gamma)(1) == \
        kostant_partition(rs.positive_roots, gamma)


def test_partition_function_brute_force():
    # count multisets of positive roots summing to gamma
    rs = root_system("B", 2)
    roots = rs.positive_roots

    def brute(gamma, i=0):
        if not any(gamma):
            return 1
        if i == len(roots):
            return 0
        total, g = 0, gamma
        for _ in range(8):
            total += brute(g, i + 1)
            g = tuple(a - b for a, b in zip(g, roots[i]))
        return total

    for gamma in [(0, 1), (1, 1), (1, 2), (2, 2), (0, 3), (2, 3)]:
        assert kostant_partition(roots, gamma) == brute(gamma)


@pytest.mark.parametrize("kind,n", SYSTEMS)
def test_endpoints(kind, n):
    rs = root_system(kind, n)
    whole, torus = full_datum(rs), torus_datum(rs)
    ws = dominant_weights(rs, 4)
    for lam in ws:
        for mu in ws:
            assert branching_coeff(rs, lam, whole, mu) == int(lam == mu)
            assert branching_coeff(rs, lam, torus, mu) == weight_multiplicity(rs, lam, mu)
        assert restrict_character_oracle(rs, lam, whole) == {lam: 1}
        assert restrict_character_oracle(rs, lam, torus) == weyl_character(rs, lam).terms
        assert s_mu_I_truncated(rs, whole, lam, 4).nonzero() == {lam: 1}


def test_gl2_torus_example():
    rs = root_system("A", 2)
    assert branching_coeff(rs, (0, 2), torus_datum(rs), (1, 1)) == 1


def test_gl3_to_gl1_gl2_is_littlewood_richardson():
    rs = root_system("A", 3)
    datum = LeviDatum("A", 3, (1,), ((2, 3),))
    for a in range(4):
        for b in range(3):
            for c in range(b, 4):
                product = weyl_character(rs, (0, 0, a)) * weyl_character(rs, (0, b, c))
                lr = decompose_schur(rs, product)
                for lam in dominant_weights(rs, a + b + c, exact=True):
                    assert branching_coeff(rs, lam, datum, (a, b, c)) == lr.get(lam, 0)


@pytest.mark.parametrize("kind,n", SYSTEMS)
def test_partition_formula_matches_restriction(kind, n):
    rs = root_system(kind, n)
    for datum in levi_data(rs, 6, (1, 2, 3, 5)):
        for lam in dominant_weights(rs, 5):
            oracle = restrict_character_oracle(rs, lam, datum)
            for mu, c in oracle.items():
                assert branching_coeff(rs, lam, datum, mu) == c
            # dimension bookkeeping
            total = sum(c * sum(levi_character(datum, mu).terms.values())
                        for mu, c in oracle.items())
            assert total == weyl_dimension(rs, lam)


def test_complement_roots():
    rs = root_system("C", 2)
    assert complement_roots(rs, full_datum(rs)) == []
    assert complement_roots(rs, torus_datum(rs)) == list(rs.positive_roots)


def test_lusztig_examples():
    a2 = root_system("A", 2)
    assert lusztig_q(a2, (0, 2), (1, 1)) == QPoly([0, 1])
    c2 = root_system("C", 2)
    for lam in dominant_weights(c2, 4):
        assert lusztig_q(c2, lam, lam) == QPoly([1])
    # zero weight of the adjoint representation: q^1 + q^3 (exponents of Sp4)
    assert lusztig_q(c2, (0, 2), (0, 0)) == QPoly([0, 1, 0, 1])
    assert lusztig_q(c2, (1, 1), (0, 0)) == QPoly([0, 0, 1])
    assert lusztig_q(root_system("B", 2), (0, 2), (0, 0)) == QPoly([0, 0, 1, 0, 1])


@pytest.mark.parametrize("kind,n", SYSTEMS)
def test_lusztig_at_one_and_nonnegative(kind, n):
    rs = root_system(kind, n)
    ws = dominant_weights(rs, 5)
    for lam in ws:
        for mu in ws:
            k = lusztig_q(rs, lam, mu)
            assert k.nonnegative()
            assert k(1) == weight_multiplicity(rs, lam, mu)


@pytest.mark.parametrize("kind,n,mu", [("C", 3, (1, 2, 3)), ("C", 4, (0, 1, 1, 3)),
                                        ("B", 3, (1, 2, 3)), ("D", 4, (0, 1, 2, 3)),
                                        ("A", 4, (0, 1, 2, 3))])
def test_plethysm_theorem_examples(kind, n, mu):
    rs = root_system(kind, n)
    q = compute_quotient(kind, n, mu, 3)
    assert q
    bound = rs.weight_size(mu) + 2
    lhs = s_mu_I_truncated(rs, q.datum, q.weight, bound).scaled(q.sign)
    assert lhs == phi_plethysm_truncated(rs, mu, 3, bound)
