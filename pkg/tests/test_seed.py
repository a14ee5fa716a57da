"""Coefficient dynamics: mutation, permutation, words, the conserved q."""

import random

import pytest

from qpcluster.errors import PoleAtPoint

from qpcluster.quiver import build_gen_qpvi_quiver, transposition
from qpcluster.rational import Q
from qpcluster.seed import (YSeed, all_ones_seed, apply_word, invert_word, mu,
                            mutate_seed, perm, permute_seed, q_of,
                            seeds_equal, symbolic_seed)


def random_seed_values(n, rng):
    q = build_gen_qpvi_quiver(n)
    y = tuple(Q(rng.randint(1, 30), rng.randint(1, 30))
              * (1 if rng.random() < 0.5 else -1) for _ in range(q.size))
    return YSeed(quiver=q, y=y)


def test_mutated_coefficient_inverts():
    rng = random.Random(0)
    s = random_seed_values(1, rng)
    for k in range(1, 9):
        assert mutate_seed(s, k).y_at(k) == 1 / s.y_at(k)


@pytest.mark.parametrize("n", [1, 2])
def test_mu1_action_matches_display(n):
    rng = random.Random(3)
    s = random_seed_values(n, rng)
    s1 = mutate_seed(s, 1)
    y = s.y_at
    assert s1.y_at(2 * n + 3) == (1 + y(1)) * y(2 * n + 3)
    assert s1.y_at(2 * n + 4) == y(2 * n + 4) / (1 + 1 / y(1))
    assert s1.y_at(4 * n + 3) == y(4 * n + 3) / (1 + 1 / y(1))
    assert s1.y_at(4 * n + 4) == (1 + y(1)) * y(4 * n + 4)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_mutation_involution_on_seeds(n):
    rng = random.Random(n)
    done = 0
    while done < 20:
        s = random_seed_values(n, rng)
        try:
            for k in range(1, 4 * n + 5):
                assert seeds_equal(mutate_seed(mutate_seed(s, k), k), s)
        except PoleAtPoint:
            continue  # hit 1 + y_k = 0 exactly; resample, never perturb
        done += 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_transposition_conjugates_mutation(n):
    # (j,k) mu_i = mu_{(j,k)(i)} (j,k)
    rng = random.Random(10 + n)
    N = 4 * n + 4
    for _ in range(20):
        s = random_seed_values(n, rng)
        i = rng.randint(1, N)
        j, k = rng.sample(range(1, N + 1), 2)
        tr = transposition(N, j, k)
        img = k if i == j else (j if i == k else i)
        lhs = permute_seed(mutate_seed(s, i), tr)
        rhs = mutate_seed(permute_seed(s, tr), img)
        assert seeds_equal(lhs, rhs)


def test_permute_swaps_coefficients():
    rng = random.Random(5)
    s = random_seed_values(1, rng)
    tr = transposition(8, 1, 2)
    s2 = permute_seed(s, tr)
    assert s2.y_at(1) == s.y_at(2) and s2.y_at(2) == s.y_at(1)
    assert seeds_equal(permute_seed(s2, tr), s)


def test_q_conserved_by_every_token():
    rng = random.Random(6)
    s = random_seed_values(2, rng)
    q0 = q_of(s)
    for k in (1, 5, 12):
        assert q_of(mutate_seed(s, k)) == q0
    assert q_of(permute_seed(s, transposition(12, 3, 9))) == q0


def test_q_trivial_values():
    assert q_of(all_ones_seed(build_gen_qpvi_quiver(1))) == 1
    q = build_gen_qpvi_quiver(1)
    y = (Q(2), Q(1, 2), Q(3), Q(1, 3), Q(5), Q(1, 5), Q(7), Q(1, 7))
    assert q_of(YSeed(quiver=q, y=y)) == 1


def test_apply_word_identity():
    rng = random.Random(7)
    s = random_seed_values(1, rng)
    assert seeds_equal(apply_word(s, [mu(1), mu(1)]), s)


def test_r0_worked_example_first_coordinate():
    rng = random.Random(8)
    s = random_seed_values(1, rng)
    word = [mu(1), perm(transposition(8, 1, 2)), mu(1)]
    out = apply_word(s, word)
    assert out.y_at(1) == 1 / s.y_at(2)
    assert out.y_at(2) == 1 / s.y_at(1)


def test_apply_word_against_independent_interpreter():
    # a from-scratch single-step interpreter sharing no code with seed.py
    def step_mutate(lam, y, k):
        N = len(y)
        yk = y[k - 1]
        out = []
        for i in range(1, N + 1):
            if i == k:
                out.append(1 / yk)
                continue
            lki = lam[k - 1][i - 1]
            v = y[i - 1]
            for _ in range(abs(lki)):
                v = v / (1 + 1 / yk) if lki > 0 else v * (1 + yk)
            out.append(v)
        new_lam = [[0] * N for _ in range(N)]
        for i in range(N):
            for j in range(N):
                if i == k - 1 or j == k - 1:
                    new_lam[i][j] = -lam[i][j]
                elif lam[i][k - 1] * lam[k - 1][j] > 0:
                    s = 1 if lam[i][k - 1] > 0 else -1
                    new_lam[i][j] = lam[i][j] + s * lam[i][k - 1] * lam[k - 1][j]
                else:
                    new_lam[i][j] = lam[i][j]
        return new_lam, out

    def step_perm(lam, y, images):
        N = len(y)
        new_y = [y[images[i] - 1] for i in range(N)]
        new_lam = [[lam[images[i] - 1][images[j] - 1] for j in range(N)]
                   for i in range(N)]
        return new_lam, new_y

    rng = random.Random(9)
    n = 2
    s = random_seed_values(n, rng)
    N = 4 * n + 4
    word = []
    for _ in range(15):
        if rng.random() < 0.7:
            word.append(mu(rng.randint(1, N)))
        else:
            a, b = rng.sample(range(1, N + 1), 2)
            word.append(perm(transposition(N, a, b)))
    expected = apply_word(s, word)
    lam = [list(r) for r in s.quiver.lam]
    y = list(s.y)
    for kind, arg in reversed(word):
        lam, y = (step_mutate(lam, y, arg) if kind == "mu"
                  else step_perm(lam, y, arg))
    assert tuple(tuple(r) for r in lam) == expected.quiver.lam
    assert all(a == b for a, b in zip(y, expected.y))


def test_invert_word_round_trip():
    rng = random.Random(11)
    s = random_seed_values(1, rng)
    word = [mu(3), perm(transposition(8, 2, 7)), mu(5), mu(1)]
    assert seeds_equal(apply_word(apply_word(s, word), invert_word(word)), s)


def test_json_round_trip_bit_exact():
    rng = random.Random(12)
    s = random_seed_values(2, rng)
    s2 = YSeed.from_json(s.to_json())
    assert seeds_equal(s, s2)
    assert s.to_json() == s2.to_json()


def test_symbolic_mutation_involution_and_q():
    s, vt = symbolic_seed(build_gen_qpvi_quiver(1))
    s2 = mutate_seed(mutate_seed(s, 1), 1)
    assert all(a == b for a, b in zip(s.y, s2.y))
    assert q_of(mutate_seed(s, 4)) == q_of(s)
