"""Exact arithmetic kernel: rationals, rational functions, sampling."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpcluster.errors import (PoleAtPoint, UnboundVariable,
                              UnsatisfiableConstraint)
from qpcluster.polyfunc import RatFunc, p_gcd, p_mul
from qpcluster.rational import Q, VarTable, qparse, qstr
from qpcluster.sampling import Constraint, identity_test, sample_point

rationals = st.fractions(max_denominator=10**4)


def as_q(fr):
    return Q(fr.numerator, fr.denominator)


def test_rat_normalization_invariants():
    x = Q(6, 4)
    assert (x.numerator, x.denominator) == (3, 2)
    assert Q(-6, 4).denominator == 2 and Q(-6, 4).numerator == -3
    z = Q(0, 7)
    assert (z.numerator, z.denominator) == (0, 1)
    assert Q(2, -4).denominator > 0


def test_rat_arith_examples():
    assert Q(1, 3) + Q(1, 6) == Q(1, 2)
    assert qparse("7/2") == Q(7, 2)
    assert qstr(Q(-3)) == "-3/1"
    assert qparse(qstr(Q(22, 7))) == Q(22, 7)


@settings(max_examples=100, deadline=None)
@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    a, b, c = as_q(a), as_q(b), as_q(c)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if a != 0:
        assert a * (1 / a) == 1


@pytest.fixture
def vt3():
    return VarTable(names=("y_1", "y_2", "y_3"))


def test_symbolic_cancellation_to_unity(vt3):
    y1 = RatFunc.var(vt3, "y_1")
    y2 = RatFunc.var(vt3, "y_2")
    assert (y1 / y2) * (y2 / y1) == 1


def test_schoolbook_expansion_oracle(vt3):
    # independent schoolbook multiplier over plain dicts
    def school_mul(a, b):
        out = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                key = tuple(x + y for x, y in zip(ma, mb))
                out[key] = out.get(key, Q(0)) + ca * cb
        return {k: v for k, v in out.items() if v != 0}

    one_plus_y1 = {(0, 0, 0): Q(1), (1, 0, 0): Q(1)}
    sq = school_mul(one_plus_y1, one_plus_y1)
    # ((1+y1)^2 - 1 - 2 y1) / y1 == y1
    sq[(0, 0, 0)] = sq[(0, 0, 0)] - 1
    sq[(1, 0, 0)] = sq[(1, 0, 0)] - 2
    sq = {k: v for k, v in sq.items() if v != 0}
    lhs = RatFunc(vt3, sq) / RatFunc.var(vt3, "y_1")
    assert lhs == RatFunc.var(vt3, "y_1")


def test_ratfunc_canonical_form(vt3):
    y1 = RatFunc.var(vt3, "y_1")
    y2 = RatFunc.var(vt3, "y_2")
    f = (1 + y1) / (1 - y2)
    g = ((1 + y1) * (1 + y2)) / ((1 - y2) * (1 + y2))
    assert f.num == g.num and f.den == g.den


@settings(max_examples=30, deadline=None)
@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(1, 4))
def test_gcd_recovers_common_factor(a, b, e):
    vt = VarTable(names=("x", "y"))
    x = RatFunc.var(vt, "x")
    y = RatFunc.var(vt, "y")
    common = (x + a) * (y + b) ** e
    if common.is_zero():
        return
    p = (x * y + 1) * common
    q = (x - y) * common
    g = p_gcd(p.num, q.num)
    # g equals common up to a rational scalar: exact division both ways
    from qpcluster.polyfunc import p_div_exact
    p_div_exact(p.num, g)
    p_div_exact(g, common.num)


def test_eval_examples(vt3):
    y1, y2, y3 = (RatFunc.var(vt3, f"y_{i}") for i in (1, 2, 3))
    assert (y1 * y2).eval({"y_1": Q(2), "y_2": Q(3, 4)}) == Q(3, 2)
    with pytest.raises(PoleAtPoint):
        (1 / (1 + y1)).eval({"y_1": Q(-1)})
    f = (1 + y1 + y1 * y3) / y2
    assert f.eval({"y_1": Q(1), "y_2": Q(2), "y_3": Q(5)}) == Q(7, 2)
    with pytest.raises(UnboundVariable):
        f.eval({"y_1": Q(1), "y_2": Q(2)})


def test_eval_commutes_with_arithmetic(vt3):
    y1, y2, y3 = (RatFunc.var(vt3, f"y_{i}") for i in (1, 2, 3))
    f = (1 + y1 * y2) / (2 + y3)
    g = (y2 - y3) / (1 + y1 * y1)
    rng = random.Random(4)
    done = 0
    while done < 50:
        pt = {name: Q(rng.randint(-9, 9), rng.randint(1, 9))
              for name in vt3.names}
        try:
            fv, gv = f.eval(pt), g.eval(pt)
            assert (f * g).eval(pt) == fv * gv
            assert (f + g).eval(pt) == fv + gv
        except PoleAtPoint:
            continue
        done += 1


def test_sample_point_deterministic():
    vt = VarTable(names=("x", "y", "z"))
    p1 = sample_point(vt, (), rng_seed=42)
    p2 = sample_point(vt, (), rng_seed=42)
    assert p1 == p2
    assert p1 != sample_point(vt, (), rng_seed=43)
    for v in p1.values():
        assert v != 0
        assert 1 <= abs(v.numerator) <= 64 and 1 <= v.denominator <= 64


def test_sample_point_roots_positive_and_constraints():
    n = 2
    names = ["w", "u_q"] + [f"a_{i}" for i in range(1, n + 2)] \
        + [f"b_{i}" for i in range(1, n + 1)] + [f"b_{n + 1}"]
    vt = VarTable(names=tuple(names), roots={"w": n + 1, "u_q": 2 * (n + 1)})
    mono = {"w": n + 1, "u_q": -2 * n * (n + 1)}
    for i in range(1, n + 2):
        mono[f"a_{i}"] = -1
    for i in range(1, n + 1):
        mono[f"b_{i}"] = -1
    cons = (Constraint(slack=f"b_{n + 1}", coeff=1, monomial=mono),)
    pt = sample_point(vt, cons, rng_seed=7)
    assert pt["w"] > 0 and pt["u_q"] > 0
    q = pt["u_q"] ** (2 * (n + 1))
    prod = Q(1)
    for i in range(1, n + 2):
        prod = prod * pt[f"a_{i}"] * pt[f"b_{i}"]
    assert q**n * prod == pt["w"] ** (n + 1)


def test_root_binding_forces_value():
    vt = VarTable(names=("u_t",), roots={"u_t": 2})
    t = Q(3, 2) ** 2
    assert t == Q(9, 4)  # sampled u_t = 3/2 at n=1 forces t = 9/4


def test_identity_test_pass_and_fail():
    vt = VarTable(names=("y",))
    res = identity_test(lambda p: Q(1), lambda p: Q(1), vt, trials=20)
    assert res.passed and res.trials == 20
    res = identity_test(lambda p: (1 + p["y"]) ** 2,
                        lambda p: 1 + 2 * p["y"] + p["y"] ** 2, vt, trials=20)
    assert res.passed
    res = identity_test(lambda p: p["y"], lambda p: p["y"] + 1, vt, trials=3)
    assert not res.passed and res.failures[0].point


def test_identity_test_exhausts_resamples():
    vt = VarTable(names=("y",))

    def always_pole(p):
        raise PoleAtPoint("forever")

    res = identity_test(always_pole, lambda p: Q(1), vt, trials=1)
    assert not res.passed
    assert res.failures[0].lhs == "ExhaustedResamples"


def test_unsatisfiable_constraint():
    vt = VarTable(names=("x", "s"))
    cons = (Constraint(slack="s", coeff=0, monomial={"x": 1}),)
    with pytest.raises(UnsatisfiableConstraint):
        sample_point(vt, cons, rng_seed=1)
