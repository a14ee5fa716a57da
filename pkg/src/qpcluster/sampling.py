"""Deterministic sampling of exact rational points and identity testing.

Random points drive every probabilistic-exact verification in the package:
an identity of rational functions either holds at a random rational point or
the point is a witness against it, so exact equality at independently sampled
points is a Schwartz-Zippel style test with no tolerance anywhere.

Free generators are drawn from a fixed hat distribution: numerator and
denominator uniform in [1, 64], a random sign on non-root generators, root
generators kept positive.  Slack variables are then solved from monomial
constraints so that all declared formal roots evaluate to exact rationals
(constraint-variety sampling).  Sampling is a pure function of
``(vt, constraints, rng_seed)``; per-trial streams are split deterministically
from the seed so results never depend on evaluation order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .errors import ExhaustedResamples, PoleAtPoint, UnsatisfiableConstraint
from .rational import Q, VarTable, qpow, qstr
from .report import CheckResult

#: Bound on consecutive pole hits before a trial is reported as exhausted.
MAX_RESAMPLES = 200


@dataclass(frozen=True)
class Constraint:
    """A monomial equation solved for one slack variable.

    ``slack = coeff * prod(var ** exp)`` over the other generators.  Negative
    exponents are allowed; a vanishing divisor makes the point unsatisfiable
    and forces an internal resample.
    """

    slack: str
    coeff: object
    monomial: dict[str, int]

    def solve(self, point: dict[str, object]):
        val = Q(self.coeff)
        for name, e in self.monomial.items():
            base = point[name]
            if base == 0 and e < 0:
                raise UnsatisfiableConstraint(
                    f"constraint for {self.slack!r} divides by zero")
            val = val * qpow(base, e)
        if val == 0:
            raise UnsatisfiableConstraint(f"slack {self.slack!r} became zero")
        return val


def _draw(rng: random.Random, positive: bool):
    p = rng.randint(1, 64)
    q = rng.randint(1, 64)
    v = Q(p, q)
    if not positive and rng.random() < 0.5:
        v = -v
    return v


def sample_point(vt: VarTable, constraints: tuple[Constraint, ...] = (),
                 rng_seed: int = 0) -> dict[str, object]:
    """Draw one exact rational point; deterministic in all arguments."""
    slack_names = {c.slack for c in constraints}
    for attempt in range(MAX_RESAMPLES):
        rng = random.Random(f"{rng_seed}|{attempt}")
        point: dict[str, object] = {}
        for name in vt.names:
            if name in slack_names:
                continue
            point[name] = _draw(rng, positive=vt.is_root(name))
        try:
            for c in constraints:
                point[c.slack] = c.solve(point)
        except UnsatisfiableConstraint:
            continue
        return point
    raise UnsatisfiableConstraint(
        f"no satisfiable point within {MAX_RESAMPLES} attempts")


def format_point(point: dict[str, object]) -> dict[str, str]:
    return {k: qstr(v) for k, v in point.items()}


def run_identity(name: str, n: int, check, sampler, trials: int,
                 rng_seed: int) -> CheckResult:
    """Evaluate ``check`` at ``trials`` sampled points, resampling on poles.

    ``sampler(trial_seed)`` must return a point (any replayable object with a
    ``format`` understood by the caller); ``check(point)`` returns an iterable
    of ``(label, lhs, rhs)`` triples that must be exactly equal.  Points whose
    evaluation hits a pole are resampled up to :data:`MAX_RESAMPLES` times;
    exhaustion is reported as a failure, never skipped.
    """
    result = CheckResult(relation=name, n=n, trials=trials)
    for trial in range(trials):
        done = False
        for attempt in range(MAX_RESAMPLES):
            point = sampler(f"{rng_seed}|{trial}|{attempt}")
            try:
                triples = list(check(point))
            except (PoleAtPoint, ZeroDivisionError):
                continue
            done = True
            for label, lhs, rhs in triples:
                if lhs != rhs:
                    result.record_failure(_as_point_dict(point),
                                          f"{label}: {_val_str(lhs)}",
                                          _val_str(rhs))
            break
        if not done:
            result.record_failure({"trial": str(trial)},
                                  "ExhaustedResamples", "")
    return result


def identity_test(lhs: Callable, rhs: Callable, vt: VarTable,
                  constraints: tuple[Constraint, ...] = (), trials: int = 20,
                  rng_seed: int = 0, name: str = "identity",
                  n: int = 0) -> CheckResult:
    """Schwartz-Zippel test of ``lhs == rhs`` over the constraint variety."""

    def sampler(trial_seed: str):
        return sample_point(vt, constraints, rng_seed=trial_seed)

    def check(point):
        return [("value", lhs(point), rhs(point))]

    return run_identity(name, n, check, sampler, trials, rng_seed)


def _as_point_dict(point) -> dict[str, str]:
    if isinstance(point, dict):
        return format_point(point)
    return {"point": _val_str(point)}


def _val_str(v) -> str:
    if isinstance(v, (tuple, list)):
        return "(" + ",".join(_val_str(x) for x in v) + ")"
    if hasattr(v, "numerator") and hasattr(v, "denominator"):
        return qstr(v)
    return str(v)
