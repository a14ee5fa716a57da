"""Weyl-group representation: parameters, words, closed forms, suites."""

import random

import pytest

from qpcluster.errors import PoleAtPoint

from qpcluster.quiver import build_gen_qpvi_quiver
from qpcluster.rational import Q
from qpcluster.report import merge_pass
from qpcluster.seed import all_ones_seed, YSeed, mu, perm, symbolic_seed
from qpcluster.weylrep import (act_closed_form, act_word, cyc_sum_S,
                               generator_names, generator_word, params_from_y,
                               verify_B_lemmas, verify_fundamental_relations,
                               verify_generator_consistency,
                               verify_quiver_invariance, verify_s0_derivation,
                               y_from_params)


def random_seed_values(n, rng):
    q = build_gen_qpvi_quiver(n)
    y = tuple(Q(rng.randint(1, 30), rng.randint(1, 30))
              * (1 if rng.random() < 0.5 else -1) for _ in range(q.size))
    return YSeed(quiver=q, y=y)


def test_params_all_ones():
    p = params_from_y(all_ones_seed(build_gen_qpvi_quiver(2)))
    assert all(v == 1 for v in p.flat())


@pytest.mark.parametrize("n", [1, 2, 3])
def test_param_product_invariants(n):
    rng = random.Random(n)
    for _ in range(20):
        p = params_from_y(random_seed_values(n, rng))
        prod = Q(1)
        for a in p.alpha:
            prod = prod * a
        assert prod == p.q
        assert p.beta[0] * p.beta[1] == p.q
        assert p.beta_p[0] * p.beta_p[1] == p.q
        # the two displayed beta_0 / beta'_0 factorizations
        b0 = bp0 = Q(1)
        for i in range(n + 1):
            b0 = b0 * p.phi[2 * i] * p.alpha[2 * i + 1] / p.phi[2 * i + 1]
            bp0 = bp0 * p.phi[2 * i] * p.phi[2 * i + 1]
        assert b0 == p.beta[0] and bp0 == p.beta_p[0]


def test_params_direct_substitution():
    q = build_gen_qpvi_quiver(1)
    y = (Q(2), Q(3)) + (Q(1),) * 6
    p = params_from_y(YSeed(quiver=q, y=y))
    assert p.alpha[0] == 6 and p.phi[0] == 2


def test_y_from_params_round_trips():
    rng = random.Random(17)
    for n in (1, 2):
        for _ in range(20):
            s = random_seed_values(n, rng)
            s2 = y_from_params(params_from_y(s))
            assert all(a == b for a, b in zip(s.y, s2.y))
    # all-ones params give the all-ones seed
    p = params_from_y(all_ones_seed(build_gen_qpvi_quiver(1)))
    assert all(v == 1 for v in y_from_params(p).y)
    # alpha_0 = 6, phi_0 = 2 reconstructs y_1 = 2, y_2 = 3
    s = y_from_params(params_from_y(YSeed(quiver=build_gen_qpvi_quiver(1),
                                          y=(Q(2), Q(3)) + (Q(1),) * 6)))
    assert s.y_at(1) == 2 and s.y_at(2) == 3


def test_generator_word_tables():
    from qpcluster.quiver import transposition
    assert generator_word("r_0", 1) == [mu(1), perm(transposition(8, 1, 2)),
                                        mu(1)]
    assert generator_word("s_0", 1) == [mu(1), mu(6), mu(3),
                                        perm(transposition(8, 3, 8)),
                                        mu(3), mu(6), mu(1)]


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("name", ["s_0", "s_1", "s'_0", "s'_1"])
def test_s_words_are_palindromes(name, n):
    word = generator_word(name, n)
    assert len(word) == 2 * (2 * n + 1) + 1
    assert word == word[::-1]
    assert word[len(word) // 2][0] == "perm"


@pytest.mark.parametrize("n", [1, 2, 3])
def test_generator_words_restore_quiver(n):
    rng = random.Random(20 + n)
    s = random_seed_values(n, rng)
    for name in generator_names(n):
        out = act_word(name, s)  # raises QuiverNotRestored on failure
        assert out.quiver.lam == s.quiver.lam


def test_r_squared_is_identity_on_y():
    rng = random.Random(23)
    for n in (1, 2):
        while True:
            s = random_seed_values(n, rng)
            try:
                for i in range(2 * n + 2):
                    out = act_word(f"r_{i}", act_word(f"r_{i}", s))
                    assert all(a == b for a, b in zip(out.y, s.y))
                break
            except PoleAtPoint:
                continue


def test_pi_shifts_alpha():
    rng = random.Random(24)
    s = random_seed_values(2, rng)
    p = params_from_y(s)
    p2 = params_from_y(act_word("pi", s))
    for i in range(6):
        assert p2.alpha[i] == p.a(i + 1)


def test_r0_closed_form_displays():
    rng = random.Random(25)
    s = random_seed_values(1, rng)
    p = params_from_y(s)
    p2 = act_closed_form("r_0", p)
    assert p2.alpha[0] == 1 / p.alpha[0]
    assert p2.alpha[1] == p.alpha[0] * p.alpha[1]
    assert p2.phi[0] == p.phi[0] / p.alpha[0]
    assert p2.phi[1] == p.phi[1] * p.alpha[0] * (1 + p.phi[0]) \
        / (p.alpha[0] + p.phi[0])
    assert p2.beta == p.beta and p2.beta_p == p.beta_p


def test_rho_closed_form_display():
    rng = random.Random(26)
    s = random_seed_values(2, rng)
    p = params_from_y(s)
    p2 = act_closed_form("rho", p)
    n = 2
    for i in range(n + 1):
        assert p2.phi[2 * i] == p.a(2 * n + 2 - 2 * i) / p.f(2 * n + 2 - 2 * i)
        assert p2.phi[2 * i + 1] == p.f(2 * n + 1 - 2 * i)


def test_s_fixes_alpha_and_other_beta():
    rng = random.Random(27)
    s = random_seed_values(2, rng)
    p = params_from_y(s)
    for name in ("s_0", "s_1"):
        p2 = act_closed_form(name, p)
        assert p2.alpha == p.alpha and p2.beta_p == p.beta_p
    for name in ("s'_0", "s'_1"):
        p2 = act_closed_form(name, p)
        assert p2.alpha == p.alpha and p2.beta == p.beta
    assert act_closed_form("s_0", p).beta[0] == 1 / p.beta[0]


@pytest.mark.parametrize("n,gens,trials", [
    (1, None, 20),
    (2, [f"r_{i}" for i in range(6)] + ["pi"], 10),
    (3, ["s_0"], 5),
])
def test_generator_consistency(n, gens, trials):
    res = verify_generator_consistency(n, trials=trials, rng_seed=1,
                                       generators=gens)
    assert merge_pass(res), [r.relation for r in res if not r.passed]


@pytest.mark.parametrize("n", [1, 2])
def test_fundamental_relations(n):
    res = verify_fundamental_relations(n, trials=3, rng_seed=2)
    assert merge_pass(res), [r.relation for r in res if not r.passed]
    order = next(r for r in res if r.relation == "order(pi)")
    assert order.notes["observed_order_of_pi"] == str(2 * n + 2)


def test_commuting_r0_r2_special_case_n2():
    res = verify_fundamental_relations(2, trials=20, rng_seed=3)
    comm = next(r for r in res if r.relation == "comm(r_0,r_2)")
    assert comm.passed


@pytest.mark.parametrize("n,trials", [(1, 20), (2, 10)])
def test_s0_derivation(n, trials):
    res = verify_s0_derivation(n, trials=trials, rng_seed=4)
    assert merge_pass(res)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_b_lemmas(n):
    res = verify_B_lemmas(n, trials=5, rng_seed=5)
    assert merge_pass(res)


def test_b_lemma_symmetric_point():
    # all phi_i = alpha_i = 1: S_m = 2(n+1) and both Lem_1 sides are 4(n+1)
    for n in (1, 2, 3):
        p = params_from_y(all_ones_seed(build_gen_qpvi_quiver(n)))
        s_val = cyc_sum_S(p, 0)
        assert s_val == 2 * (n + 1)
        lhs = cyc_sum_S(p, 0) + p.f(1) * cyc_sum_S(p, 2)
        rhs = (1 + p.a(0) / p.f(0)) * cyc_sum_S(p, 1)
        assert lhs == rhs == 4 * (n + 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_quiver_invariance_suite(n):
    assert merge_pass(verify_quiver_invariance(n))


def test_symbolic_generator_consistency_n1():
    # full symbolic closed-form check for a rotation and one reflection
    s, vt = symbolic_seed(build_gen_qpvi_quiver(1))
    for name in ("pi'", "r_0"):
        lhs = params_from_y(act_word(name, s))
        rhs = act_closed_form(name, params_from_y(s))
        assert all(a == b for a, b in zip(lhs.flat(), rhs.flat()))
