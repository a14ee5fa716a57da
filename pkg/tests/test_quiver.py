"""Exchange matrix construction, mutation and permutation."""

import pytest

from qpcluster.errors import IndexOutOfRange
from qpcluster.quiver import (Quiver, build_gen_qpvi_quiver, is_invariant,
                              mutate_matrix, permute_matrix, transposition)
from qpcluster.seed import mu, perm
from qpcluster.weylrep import generator_word


def test_build_entries_n1():
    q = build_gen_qpvi_quiver(1)
    assert q.entry(1, 7) == 1
    assert q.entry(1, 8) == -1
    assert q.entry(1, 5) == -1
    assert q.entry(1, 6) == 1


def test_build_row3_n2_hand_expansion():
    # i=1 term of the defining sum: X_{3,7} - X_{3,8} - X_{3,9} + X_{3,10}
    q = build_gen_qpvi_quiver(2)
    row3 = [q.entry(3, j) for j in range(1, 13)]
    expected = [0] * 12
    expected[6], expected[7], expected[8], expected[9] = 1, -1, -1, 1
    assert row3 == expected
    assert sum(1 for v in row3 if v) == 4


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_skew_and_entry_range(n):
    q = build_gen_qpvi_quiver(n)
    q.check_skew()
    assert {abs(v) for row in q.lam for v in row} <= {0, 1}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_mutation_involution(n):
    q = build_gen_qpvi_quiver(n)
    for k in range(1, q.size + 1):
        assert mutate_matrix(mutate_matrix(q, k), k).lam == q.lam


def test_mutation_flips_incident_edges():
    q = build_gen_qpvi_quiver(1)
    q1 = mutate_matrix(q, 1)
    for j in range(1, 9):
        assert q1.entry(1, j) == -q.entry(1, j)
    q1.check_skew()


def test_mutation_path_example():
    # 1 -> 2 -> 3; mutating at 2 adds the arrow 1 -> 3
    lam = ((0, 1, 0), (-1, 0, 1), (0, -1, 0))
    q = Quiver(n=0, lam=lam)
    q1 = mutate_matrix(q, 2)
    assert q1.entry(1, 3) == 1
    assert q1.entry(1, 2) == -1 and q1.entry(2, 3) == -1


def test_mutation_index_range():
    with pytest.raises(IndexOutOfRange):
        mutate_matrix(build_gen_qpvi_quiver(1), 9)


def test_permute_identity_and_involution():
    q = build_gen_qpvi_quiver(1)
    ident = tuple(range(1, 9))
    assert permute_matrix(q, ident).lam == q.lam
    tr = transposition(8, 1, 2)
    assert permute_matrix(permute_matrix(q, tr), tr).lam == q.lam


def test_permute_single_arrow():
    lam = ((0, 1), (-1, 0))  # arrow 1 -> 2
    q = Quiver(n=0, lam=lam)
    q1 = permute_matrix(q, (2, 1))
    assert q1.entry(2, 1) == 1  # arrow 2 -> 1 after relabeling


@pytest.mark.parametrize("n", [1, 2, 3])
def test_r0_word_invariance(n):
    q = build_gen_qpvi_quiver(n)
    assert is_invariant(q, generator_word("r_0", n))


def test_single_mutation_not_invariant():
    q = build_gen_qpvi_quiver(1)
    assert not is_invariant(q, [mu(1)])
    assert is_invariant(q, [])


def test_json_round_trip():
    q = build_gen_qpvi_quiver(2)
    assert Quiver.from_json(q.to_json()).lam == q.lam
