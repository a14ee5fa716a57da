"""Batch command-line front end.

Subcommands: ``quiver build|mutate``, ``act``, ``verify``, ``evolve qp|tau3``
and ``lax check``.  All randomness derives from ``--seed`` (default 0), so a
fixed command line produces byte-identical output.  Rationals in every file
format are decimal-free "p/q" strings.  Exit codes: 0 all checks pass,
1 at least one check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from .quiver import Quiver, build_gen_qpvi_quiver, mutate_matrix
from .rational import qstr
from .report import CheckResult, merge_pass, report_json
from .sampling import sample_point
from .seed import YSeed, apply_word, invert_word
from . import lax, painleve, translations, weylrep


# ---------------------------------------------------------------------------
# word grammar: names separated by spaces, rightmost acting first, with
# optional integer powers such as  "s_0 pi^-1 cT_2^3 mu_4"
# ---------------------------------------------------------------------------

def resolve_name(name: str, n: int) -> list:
    if name.startswith("mu_"):
        return [("mu", int(name[3:]))]
    alias = {"pip": "pi'", "sp_0": "s'_0", "sp_1": "s'_1", "Vp": "V'",
             "tau_1": "tau1", "tau_2": "tau2", "tau_3": "tau3"}
    name = alias.get(name, name)
    if name.startswith("Tp_"):
        name = "T'_" + name[3:]
    if name.startswith("Up_"):
        name = "U'_" + name[3:]
    if name.startswith("cUp_"):
        name = "cU'_" + name[4:]
    try:
        return weylrep.generator_word(name, n)
    except ValueError:
        return translations.translation_word(name, n)


def parse_word(text: str, n: int) -> list:
    word: list = []
    for token in text.split():
        if "^" in token:
            base, e = token.rsplit("^", 1)
            power = int(e)
        else:
            base, power = token, 1
        w = resolve_name(base, n)
        if power < 0:
            w, power = invert_word(w), -power
        word += w * power
    return word


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

def run_suite(suite: str, n: int, trials: int, seed: int,
              relations=None) -> list[CheckResult]:
    out: list[CheckResult] = []
    if suite in ("quiver", "all"):
        out += weylrep.verify_quiver_invariance(n)
        out += weylrep.verify_s0_derivation(n, trials, seed)
    if suite in ("weyl", "all"):
        out += weylrep.verify_generator_consistency(n, trials, seed)
        out += weylrep.verify_fundamental_relations(n, trials, seed)
        out += weylrep.verify_B_lemmas(n, trials, seed)
    if suite in ("translations", "all"):
        out += translations.verify_qshift_tables(n, trials, seed)
        out += translations.verify_translation_relations(
            n, max(1, trials // 4), seed, relations=relations)
        out += translations.verify_tau3_closed_form(n, trials, seed)
    if suite in ("tau1", "all"):
        out += painleve.verify_tau1_equivalence(n, trials, seed)
    if suite in ("tilde", "all"):
        out += painleve.verify_tilde_dictionary(n, trials, seed)
    if suite in ("qluc", "all"):
        out += painleve.verify_qluc(n, max(1, trials // 2), seed)
    if suite in ("lax-compat", "all"):
        out += lax.verify_compatibility(n, max(1, trials // 2), seed)
    if suite in ("garnier", "all"):
        out += lax.verify_garnier(n, max(1, trials // 2), seed)
    if not out:
        raise ValueError(f"unknown suite {suite!r}")
    return out


def format_report(results: list[CheckResult], fmt: str, **header) -> str:
    if fmt == "json":
        return report_json(results, **header)
    if fmt == "csv":
        lines = ["relation,n,trials,pass,failures"]
        for r in results:
            lines.append(
                f"{r.relation},{r.n},{r.trials},{int(r.passed)},{len(r.failures)}")
        return "\n".join(lines) + "\n"
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status} {r.relation} (n={r.n}, trials={r.trials})")
        for f in r.failures[:3]:
            lines.append(f"     witness {f.point} lhs={f.lhs} rhs={f.rhs}")
    lines.append(f"{'PASS' if merge_pass(results) else 'FAIL'} "
                 f"{sum(r.passed for r in results)}/{len(results)} checks")
    return "\n".join(lines) + "\n"


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _sample_seed_values(n: int, seed) -> YSeed:
    point = sample_point(weylrep.y_var_table(n), (), rng_seed=seed)
    return weylrep.seed_from_point(n, point)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_quiver(args) -> int:
    if args.action == "build":
        q = build_gen_qpvi_quiver(args.n)
    else:
        with open(args.infile) as fh:
            q = Quiver.from_json(fh.read())
        q = mutate_matrix(q, args.k)
    _emit(q.to_json() + "\n", args.out)
    return 0


def cmd_act(args) -> int:
    if args.y:
        with open(args.y) as fh:
            s = YSeed.from_json(fh.read())
        n = s.n
    else:
        n = args.n
        s = _sample_seed_values(n, args.seed)
    word = parse_word(args.word, n)
    out = apply_word(s, word)
    _emit(out.to_json() + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    relations = args.relations.split(",") if args.relations not in (None, "all") \
        else None
    results = run_suite(args.suite, args.n, args.trials, args.seed,
                        relations=relations)
    text = format_report(results, args.format, suite=args.suite, n=args.n,
                         trials=args.trials, seed=args.seed)
    _emit(text, args.out)
    return 0 if merge_pass(results) else 1


def cmd_evolve(args) -> int:
    if args.flow == "qp":
        if args.state:
            with open(args.state) as fh:
                st = state_from_json(fh.read())
        else:
            point = sample_point(
                painleve.painleve_var_table(args.n, with_w=False), (),
                rng_seed=args.seed)
            st = painleve.state_from_point(args.n, point)
        n = st.n
        header = (["step", "t"]
                  + [f"a_{i}" for i in range(1, n + 2)]
                  + [f"b_{i}" for i in range(1, n + 2)]
                  + [f"f_{i}" for i in range(1, n + 1)]
                  + [f"g_{i}" for i in range(1, n + 1)])
        rows = []
        for k, cur in enumerate(painleve.evolve(st, args.steps)):
            rows.append([str(k), qstr(cur.t)]
                        + [qstr(v) for v in cur.a] + [qstr(v) for v in cur.b]
                        + [qstr(v) for v in cur.f] + [qstr(v) for v in cur.g])
    else:
        if args.y:
            with open(args.y) as fh:
                s = YSeed.from_json(fh.read())
        else:
            s = _sample_seed_values(args.n, args.seed)
        word = translations.translation_word("tau3", s.n)
        header = ["step"] + [f"y_{i}" for i in range(1, 4 * s.n + 5)]
        rows = []
        for k in range(args.steps + 1):
            rows.append([str(k)] + [qstr(v) for v in s.y])
            if k < args.steps:
                s = apply_word(s, word)
    text = ",".join(header) + "\n" + "\n".join(",".join(r) for r in rows) + "\n"
    _emit(text, args.out)
    return 0


def cmd_lax(args) -> int:
    if args.which == "compat":
        results = lax.verify_compatibility(args.n, args.trials, args.seed)
    else:
        results = lax.verify_garnier(args.n, args.trials, args.seed)
    if args.dump:
        point = sample_point(
            painleve.painleve_var_table(args.n, with_w=True),
            painleve.painleve_constraints(args.n, True), rng_seed=args.seed)
        st = painleve.state_from_point(args.n, point)
        A, B = lax.laplace_reduce(st)
        import json
        doc = {"n": args.n,
               "A": [[_lp_dump(e) for e in row] for row in A],
               "B": [[_lp_dump(e) for e in row] for row in B]}
        with open(args.dump, "w") as fh:
            json.dump(doc, fh, sort_keys=True, separators=(",", ":"))
            fh.write("\n")
    text = format_report(results, args.format, which=args.which, n=args.n,
                         trials=args.trials, seed=args.seed)
    _emit(text, args.out)
    return 0 if merge_pass(results) else 1


def _lp_dump(e: dict) -> dict:
    return {str(k): qstr(v) for k, v in sorted(e.items())}


def state_from_json(text: str) -> painleve.PainleveState:
    import json
    from .rational import qparse
    d = json.loads(text)
    return painleve.PainleveState(
        n=d["n"],
        a=tuple(qparse(v) for v in d["a"]),
        b=tuple(qparse(v) for v in d["b"]),
        u_q=qparse(d["u_q"]), u_t=qparse(d["u_t"]),
        f=tuple(qparse(v) for v in d["f"]),
        g=tuple(qparse(v) for v in d["g"]),
        h=qparse(d.get("h", "1/1")),
        w=qparse(d["w"]) if "w" in d else None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qpcluster",
        description="Exact verification and orbit generation for the "
                    "generalized q-Painleve VI cluster dynamics")
    sub = ap.add_subparsers(dest="command", required=True)

    q = sub.add_parser("quiver", help="build or mutate exchange matrices")
    q.add_argument("action", choices=["build", "mutate"])
    q.add_argument("--n", type=int, default=1)
    q.add_argument("--in", dest="infile", help="quiver JSON input")
    q.add_argument("-k", type=int, default=1, help="mutation vertex (1-based)")
    q.add_argument("--out")
    q.set_defaults(func=cmd_quiver)

    a = sub.add_parser("act", help="apply a word to a y-seed")
    a.add_argument("--word", required=True)
    a.add_argument("--n", type=int, default=1)
    a.add_argument("--y", help="seed JSON input (else sampled from --seed)")
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--out")
    a.set_defaults(func=cmd_act)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", default="all",
                   choices=["quiver", "weyl", "translations", "tau1", "tilde",
                            "qluc", "lax-compat", "garnier", "all"])
    v.add_argument("--n", type=int, default=1)
    v.add_argument("--trials", type=int, default=10)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--relations", default=None,
                   help="comma list of translation relations, or 'all'")
    v.add_argument("--format", default="json", choices=["json", "csv", "text"])
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("evolve", help="generate an orbit")
    e.add_argument("flow", choices=["qp", "tau3"])
    e.add_argument("--n", type=int, default=1)
    e.add_argument("--steps", type=int, default=8)
    e.add_argument("--state", help="qp state JSON input")
    e.add_argument("--y", help="tau3 seed JSON input")
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--out")
    e.set_defaults(func=cmd_evolve)

    l = sub.add_parser("lax", help="Lax-form checks")
    l.add_argument("action", choices=["check"])
    l.add_argument("--n", type=int, default=1)
    l.add_argument("--which", default="compat", choices=["compat", "garnier"])
    l.add_argument("--trials", type=int, default=5)
    l.add_argument("--seed", type=int, default=0)
    l.add_argument("--dump", help="write the 2x2 pair (A,B) as JSON here")
    l.add_argument("--format", default="json", choices=["json", "csv", "text"])
    l.add_argument("--out")
    l.set_defaults(func=cmd_lax)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
