"""Result records shared by all verification suites.

Every suite produces a list of :class:`CheckResult`, one per relation or
identity family.  Failures always carry a replayable witness: the sampled
point and both mismatching values, serialized as exact strings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Failure:
    point: dict[str, str]
    lhs: str
    rhs: str


@dataclass
class CheckResult:
    relation: str
    n: int
    trials: int
    passed: bool = True
    failures: list[Failure] = field(default_factory=list)
    notes: dict[str, str] = field(default_factory=dict)

    def record_failure(self, point: dict[str, str], lhs: str, rhs: str) -> None:
        self.passed = False
        self.failures.append(Failure(point=point, lhs=lhs, rhs=rhs))

    def to_dict(self) -> dict:
        d = {
            "relation": self.relation,
            "n": self.n,
            "trials": self.trials,
            "pass": self.passed,
            "failures": [
                {"point": f.point, "lhs": f.lhs, "rhs": f.rhs}
                for f in self.failures
            ],
        }
        if self.notes:
            d["notes"] = self.notes
        return d


def merge_pass(results: list[CheckResult]) -> bool:
    return all(r.passed for r in results)


def report_json(results: list[CheckResult], **header) -> str:
    """Deterministic JSON for a list of results (byte-identical per input)."""
    doc = dict(sorted(header.items()))
    doc["pass"] = merge_pass(results)
    doc["results"] = [r.to_dict() for r in results]
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
