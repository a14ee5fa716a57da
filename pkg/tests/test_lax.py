"""Lax matrices: structure, compatibility, the 2x2 reduction."""

import pytest

from qpcluster.lax import (build_Gamma, build_Gamma_tau2, build_M, build_Pi,
                           laplace_reduce, verify_compatibility,
                           verify_garnier)
from qpcluster.laurent import lp, lp_mul, lp_sub, m_det, m_eval_matrix
from qpcluster.painleve import (painleve_constraints, painleve_var_table,
                                state_from_point)
from qpcluster.rational import Q
from qpcluster.report import merge_pass
from qpcluster.sampling import sample_point


def sample_state(n, seed=0):
    pt = sample_point(painleve_var_table(n, True),
                      painleve_constraints(n, True), rng_seed=seed)
    return state_from_point(n, pt)


def test_M_shape_and_linearity():
    st = sample_state(1, seed=1)
    M = build_M(st)
    assert len(M) == 4
    exps = {e for row in M for entry in row for e in entry}
    assert exps <= {0, 2}  # constant and z = u_z^2 only
    z_rows = {r for r in range(4) for entry in M[r] if 2 in entry}
    assert z_rows == {2, 3}  # the single z-dependent block


@pytest.mark.parametrize("n", [1, 2])
def test_det_M(n):
    st = sample_state(n, seed=2)
    prod_ab = Q(1)
    for i in range(1, n + 2):
        prod_ab = prod_ab * st.a_at(i) * st.b_at(i)
    expected = lp_mul(lp_sub(lp(st.t, n + 1), lp(st.q_half_pow(-n))),
                      lp_sub(lp(1, n + 1), lp(st.q_half_pow(n) * prod_ab)))
    assert m_det(build_M(st)) == expected


def test_gamma_even_display_entry():
    st = sample_state(2, seed=3)
    G = build_Gamma(2, st)
    assert G[2][1] == lp((st.b_at(1) - st.a_at(2)) * st.t
                         / (st.f_at(1) * st.h))


@pytest.mark.parametrize("n", [1, 2])
def test_gamma_odd_unipotent(n):
    st = sample_state(n, seed=4)
    for j in range(1, 2 * n + 2, 2):
        assert m_det(build_Gamma(j, st)) == lp(1)


def test_pi_has_2n_plus_2_entries():
    for n in (1, 2, 3):
        st = sample_state(n, seed=5)
        P = build_Pi(st)
        nonzero = sum(1 for row in P for e in row if e)
        assert nonzero == 2 * n + 2


@pytest.mark.parametrize("n", [1, 2])
def test_compatibility_suite(n):
    res = verify_compatibility(n, trials=3, rng_seed=6)
    assert merge_pass(res), [r.relation for r in res if not r.passed]


def test_compatibility_even_only_n2():
    res = verify_compatibility(2, trials=2, rng_seed=7, labels=[0, 2, 4])
    assert merge_pass(res)


@pytest.mark.parametrize("n", [1, 2])
def test_gamma_tau2_block_pattern(n):
    st = sample_state(n, seed=8)
    G = build_Gamma_tau2(st)  # raises BlockPatternViolation on failure
    # overall u_z^{-1} prefactor on the non-corner blocks
    assert all(e == -1 for e in G[0][0])


@pytest.mark.parametrize("n", [1, 2])
def test_laplace_reduction_structure(n):
    st = sample_state(n, seed=9)
    A, B = laplace_reduce(st)
    top = [[Q(entry.get((n + 1) ** 2, 0)) for entry in row] for row in A]
    lead = (-st.a_at(1)) ** (n + 1)
    assert top[0][1] == 0  # lower-triangular top coefficient
    assert top[0][0] == lead / st.t and top[1][1] == lead
    detB = lp_sub(lp_mul(B[0][0], B[1][1]), lp_mul(B[0][1], B[1][0]))
    assert max(detB) == 2 * (n + 1)  # quadratic in z


@pytest.mark.parametrize("n", [1, 2])
def test_garnier_suite(n):
    res = verify_garnier(n, trials=3, rng_seed=10)
    assert merge_pass(res), [f.lhs[:60] for r in res for f in r.failures][:1]


def test_garnier_detB_roots_n3():
    # odd n: roots are b_m/a_1 and b_{n+1}/a_1 with m = (n+1)/2
    res = verify_garnier(3, trials=1, rng_seed=11)
    assert merge_pass(res)
