"""The q-P_(n+1,n+1) flow, dictionary, tilde transformations and q-LUC."""

import pytest

from qpcluster.errors import RootChoiceRequired
from qpcluster.painleve import (F_sum, G_sum, PainleveState, evolve,
                                painleve_constraints, painleve_from_params,
                                painleve_to_params, painleve_var_table,
                                qp_step, state_from_point, tilde_pi,
                                tilde_pi_squared, tilde_reflection,
                                verify_qluc, verify_tau1_equivalence,
                                verify_tilde_dictionary, R_sum)
from qpcluster.rational import Q
from qpcluster.report import merge_pass
from qpcluster.sampling import sample_point


def sample_state(n, seed=0, with_w=True):
    pt = sample_point(painleve_var_table(n, with_w),
                      painleve_constraints(n, with_w), rng_seed=seed)
    return state_from_point(n, pt)


def test_conventions_are_derived_accessors():
    st = sample_state(2, seed=1)
    assert st.b_at(0) == st.q * st.b_at(3)
    assert st.f_at(0) == st.t
    prod = st.g[0] * st.g[1]
    assert st.g_at(0) == 1 / (st.q_half_pow(0) * st.t * prod)
    assert st.t == st.u_t**3 and st.q == st.u_q**6


def test_w_constraint_holds():
    st = sample_state(2, seed=2)
    prod = Q(1)
    for i in range(1, 4):
        prod = prod * st.a_at(i) * st.b_at(i)
    assert st.w**3 == st.q**2 * prod
    st2 = sample_state(1, seed=3, with_w=False)
    with pytest.raises(RootChoiceRequired):
        st2.require_w()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_F_boundary_forms(n):
    st = sample_state(n, seed=4)
    total = sum(st.f, Q(0))
    assert F_sum(1, st) == st.t * total + st.t
    assert F_sum(n + 1, st) == total + st.t


def test_G_hand_coded_copy_n1():
    # independent transcription of the two sums for n = 1
    st = sample_state(1, seed=5)
    q_half = st.u_q**2
    g1 = st.f_at(1) + q_half * st.t * st.b_at(1) * st.a_at(2)
    g2 = q_half * st.t + st.t * st.b_at(0) * st.a_at(1) * st.f_at(1)
    assert G_sum(1, st) == g1
    assert G_sum(2, st) == g2


def test_qp_step_t_shift_and_g_relation():
    st = sample_state(1, seed=6)
    out = qp_step(st)
    assert out.t == st.q * st.t
    assert out.a == st.a and out.b == st.b
    for i in range(1, st.n + 1):
        assert st.g_at(i) * out.g_at(i) == \
            F_sum(i + 1, st) * G_sum(i, st) / (F_sum(i, st) * G_sum(i + 1, st))


def test_evolve_yields_requested_states():
    st = sample_state(1, seed=7)
    orbit = list(evolve(st, 3))
    assert len(orbit) == 4
    assert orbit[2].t == st.q**2 * st.t


def test_dictionary_values():
    st = sample_state(2, seed=8)
    p = painleve_to_params(st)
    assert p.beta_p[0] == st.t
    for i in range(st.n + 1):
        assert p.phi[2 * i] == -st.b_at(i) / st.g_at(i)
    for i in range(1, st.n + 2):
        assert p.alpha[2 * i - 1] == st.a_at(i) / st.b_at(i)


def test_dictionary_round_trip():
    for n in (1, 2):
        for seed in range(20):
            st = sample_state(n, seed=seed)
            p = painleve_to_params(st)
            back = painleve_from_params(p, a1=st.a[0], u_q=st.u_q,
                                        u_t=st.u_t, h=st.h, w=st.w)
            assert back.a == st.a and back.b == st.b
            assert back.t == st.t and back.f == st.f and back.g == st.g


def test_reverse_dictionary_rejects_wrong_scale():
    st = sample_state(1, seed=9)
    p = painleve_to_params(st)
    with pytest.raises(RootChoiceRequired):
        painleve_from_params(p, a1=2 * st.a[0], u_q=st.u_q, u_t=st.u_t)


@pytest.mark.parametrize("n,trials", [(1, 5), (2, 3), (3, 2)])
def test_tau1_equivalence(n, trials):
    res = verify_tau1_equivalence(n, trials=trials, rng_seed=10)
    assert merge_pass(res), [f.lhs for r in res for f in r.failures][:1]


def test_even_reflection_swaps_and_fixes_fg():
    st = sample_state(2, seed=11)
    out = tilde_reflection(2, st)  # swaps b_1 <-> a_2
    assert out.b_at(1) == st.a_at(2) and out.a_at(2) == st.b_at(1)
    assert out.f == st.f and out.g == st.g and out.h == st.h
    assert out.t == st.t


def test_reflections_are_involutions_on_dynamical_variables():
    st = sample_state(2, seed=12)
    for j in range(6):
        out = tilde_reflection(j, tilde_reflection(j, st))
        assert out.a == st.a and out.b == st.b
        assert out.f == st.f and out.g == st.g


def test_r1_g_display():
    st = sample_state(1, seed=13)
    out = tilde_reflection(1, st)
    assert out.g[0] == st.g[0] * R_sum(1, "baa", st) / R_sum(1, "bbb", st)


def test_tilde_pi_displays():
    st = sample_state(2, seed=14)
    out = tilde_pi(st)
    assert out.t == st.q**2 / st.t
    for i in range(1, st.n + 2):
        assert out.a_at(i) == st.b_at(i) / st.w
    assert out.b_at(st.n + 1) == st.a_at(1) / (st.w * st.q)
    # new root binding stays consistent with its defining power
    prod = Q(1)
    for i in range(1, st.n + 2):
        prod = prod * out.a_at(i) * out.b_at(i)
    assert out.w ** (st.n + 1) == out.q ** st.n * prod


def test_tilde_pi_squared_gauge_rule():
    st = sample_state(1, seed=15)
    out = tilde_pi_squared(st)
    assert out.h == st.f_at(1) * st.h * st.u_t / st.t


@pytest.mark.parametrize("n", [1, 2])
def test_tilde_dictionary_suite(n):
    res = verify_tilde_dictionary(n, trials=3, rng_seed=16)
    assert merge_pass(res), [r.relation for r in res if not r.passed]


@pytest.mark.parametrize("n", [1, 2])
def test_qluc_suite(n):
    res = verify_qluc(n, trials=3, rng_seed=17)
    assert merge_pass(res), [f.lhs for r in res for f in r.failures][:1]


def test_qluc_alpha_delta_equals_beta_gamma():
    v0, v1 = Q(3, 2), Q(5, 7)
    assert (-v1) * (-1 / v1) == (-1 / v0) * (-v0) == 1
