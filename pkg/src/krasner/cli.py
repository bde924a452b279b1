"""Command-line entry point: ``krasner <command> ...``.

Exit status is 0 on pass, 1 when a predicate or theorem fails and 2 for
usage, parse or lookup errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import classify as cl
from .constructions import build_product, build_quotient
from .corpus import CorpusEntry, corpus_from_paths, entry_from_instance, fixture_names, load_fixture, shipped_corpus
from .errors import KrasnerError
from .ideals import enumerate_hyperideals, hyperideal, is_prime, is_primary, radical
from .instance import Instance, dumps, load
from .search import GeneratorConfig, counterexample_search
from .subsets import mask_of
from .theorems import HarnessConfig, TheoremReport, run_suite

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load(arg: str) -> Instance:
    """A path to an instance file, or the name of a shipped fixture."""
    path = Path(arg)
    if path.exists():
        return load(path)
    if arg in fixture_names():
        return load_fixture(arg)
    raise UsageError(f"no such file or fixture: {arg}")


def _entry(arg: str) -> CorpusEntry:
    inst = _load(arg)
    return entry_from_instance(inst, inst.source or arg)


def _subset(entry: CorpusEntry, arg: str) -> int:
    if arg in entry.ideals:
        return entry.ideals[arg]
    index = {lab: i for i, lab in enumerate(entry.ring.labels)}
    labels = [s.strip() for s in arg.split(",") if s.strip()]
    unknown = [s for s in labels if s not in index]
    if not labels or unknown:
        raise UsageError(f"{arg!r} is neither a named ideal nor a list of carrier labels")
    return mask_of(index[s] for s in labels)


def _delta(entry: CorpusEntry, name: str):
    for d in entry.expansions:
        if d.name == name:
            return d
    raise UsageError(f"unknown expansion {name!r}; known: {', '.join(d.name for d in entry.expansions)}")


def _render_report(rep, ring) -> list[str]:
    d = rep.to_dict(ring)
    head = f"{d['verdict']}  {d['predicate']}"
    if d.get("params"):
        head += "  " + " ".join(f"{k}={v}" for k, v in d["params"].items())
    lines = [head]
    if "witness" in d:
        lines.append(f"  witness: ({', '.join(map(str, d['witness']))})")
    for sp in d.get("sub_products") or ():
        mark = "in" if sp["in_target"] else "not in"
        lines.append(f"    positions {sp['positions']}: {sp['product']} {mark} target")
    if d.get("note"):
        lines.append(f"  note: {d['note']}")
    return lines


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- commands --------------------------------------------------------------

def cmd_validate(args) -> int:
    ring = _load(args.path).ring
    report = ring.validate()
    if args.json:
        doc = {"ring": ring.name, "ok": report.ok, "checks": [c.to_dict(ring) for c in report.checks]}
        print(json.dumps(doc, indent=1, sort_keys=True))
    else:
        for c in report.checks:
            d = c.to_dict(ring)
            line = f"{d['verdict']:4}  {d['axiom']}"
            if not c.passed:
                line += f"  witness={d['witness']} lhs={d['lhs']} rhs={d['rhs']}"
                if c.note:
                    line += f" ({c.note})"
            print(line)
        print(report.summary())
    return EXIT_PASS if report.ok else EXIT_FAIL


def cmd_ideals(args) -> int:
    entry = _entry(args.path)
    ring = entry.ring
    rows = []
    for I in enumerate_hyperideals(ring, method=args.method):
        row = {"ideal": I.labels(), "proper": I.is_proper}
        if I.is_proper and ring.one is not None:
            row["prime"] = is_prime(ring, I).verdict
            row["primary"] = is_primary(ring, I).verdict
            row["radical"] = radical(ring, I).labels()
        rows.append(row)
    if args.json:
        print(json.dumps({"ring": ring.name, "ideals": rows}, indent=1, sort_keys=True))
        return EXIT_PASS
    print(f"{ring.name}: {len(rows)} hyperideals")
    for row in rows:
        flags = []
        if not row["proper"]:
            flags.append("whole")
        for key in ("prime", "primary"):
            if row.get(key):
                flags.append(key)
        if "radical" in row:
            flags.append(f"rad={{{','.join(row['radical'])}}}")
        print(f"  {{{','.join(row['ideal'])}}}  {' '.join(flags)}".rstrip())
    return EXIT_PASS


def _single(entry: CorpusEntry, Q, args):
    ring = entry.ring
    pred = args.predicate
    if pred == "prime":
        return is_prime(ring, Q)
    delta = _delta(entry, args.delta) if args.delta else None
    if pred == "delta-primary":
        return cl.is_delta_primary(ring, Q, delta)
    if pred == "absorbing":
        return cl.is_tn_absorbing(ring, Q, args.t, weakly=args.weakly)
    if pred == "absorbing-primary":
        return cl.is_tn_absorbing_delta_primary(ring, Q, args.t, delta)
    if args.strongly:
        return cl.is_strongly_variant(ring, Q, args.t, delta, weakly=args.weakly)
    if args.weakly:
        return cl.is_weakly_tn_absorbing_delta_semiprimary(ring, Q, args.t, delta)
    return cl.is_tn_absorbing_delta_semiprimary(ring, Q, args.t, delta)


def cmd_classify(args) -> int:
    entry = _entry(args.path)
    ring = entry.ring
    Q = hyperideal(ring, _subset(entry, args.ideal))
    needs_t = args.predicate not in ("prime", "delta-primary")
    if args.t is not None or not needs_t:
        if needs_t and args.t < 1:
            raise UsageError("--t must be at least 1")
        if args.delta is None and args.predicate in ("semiprimary", "absorbing-primary", "delta-primary"):
            args.delta = "delta0"
        rep = _single(entry, Q, args)
        if args.json:
            print(json.dumps(rep.to_dict(ring), indent=1, sort_keys=True))
        else:
            print("\n".join(_render_report(rep, ring)))
        return EXIT_PASS if rep.verdict else EXIT_FAIL
    deltas = [_delta(entry, args.delta)] if args.delta else entry.expansions
    rows = cl.classify_all(ring, Q, (1, 2, 3), deltas)
    if args.json:
        doc = [{"predicate": p, "t": t, "delta": d, "report": r.to_dict(ring)} for p, t, d, r in rows]
        print(json.dumps(doc, indent=1, sort_keys=True))
        return EXIT_PASS
    print(f"{ring.name}  Q={Q!r}")
    for p, t, d, r in rows:
        cfg = " ".join(x for x in (f"t={t}" if t else "", d or "") if x)
        print(f"  {'pass' if r.verdict else 'fail':4}  {p}  {cfg}".rstrip())
    return EXIT_PASS


def cmd_check_theorems(args) -> int:
    start = time.perf_counter()
    if args.paths:
        corpus = corpus_from_paths(args.paths)
    else:
        corpus = shipped_corpus()
    config = HarnessConfig(seed=args.seed, products=not args.no_products)
    report = run_suite(corpus, config) if corpus else TheoremReport()
    search = None
    if args.budget:
        search = counterexample_search(args.budget, GeneratorConfig(seed=args.seed),
                                       HarnessConfig(seed=args.seed, products=False))
        report.merge(search.report)
    report.wall_clock = time.perf_counter() - start
    if args.json:
        doc = report.to_dict()
        if search is not None:
            doc["search"] = {k: v for k, v in search.to_dict().items() if k != "report"}
        _emit(json.dumps(doc, indent=1, sort_keys=True) + "\n", args.json)
    if args.json != "-":
        text = report.to_text(timing=args.timing)
        if search is not None:
            text += f"random search: {search.generated} generated, {search.valid} valid, {search.distinct} distinct\n"
        sys.stdout.write(text)
    return EXIT_PASS if report.ok else EXIT_FAIL


def cmd_construct(args) -> int:
    if args.kind == "quotient":
        if len(args.inputs) != 2:
            raise UsageError("quotient takes a ring and an ideal")
        entry = _entry(args.inputs[0])
        P = hyperideal(entry.ring, _subset(entry, args.inputs[1]))
        ring = build_quotient(entry.ring, P, name=args.ideal_name)
    else:
        if len(args.inputs) < 2:
            raise UsageError("product takes at least two rings")
        ring = build_product([_entry(p).ring for p in args.inputs])
    if args.name:
        ring.name = args.name
    _emit(dumps(ring), args.out)
    return EXIT_PASS


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="krasner", description="Finite Krasner (m,n)-hyperrings and their hyperideals.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the Krasner axioms of an instance")
    p.add_argument("path", help="instance file or shipped fixture name")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("ideals", help="list hyperideals with prime/primary flags")
    p.add_argument("path")
    p.add_argument("--method", choices=("auto", "exhaustive", "bfs"), default="auto")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("classify", help="classify a hyperideal (one verdict, or the full matrix without --t)")
    p.add_argument("path")
    p.add_argument("ideal", help="ideal name from the file, or comma-separated carrier labels")
    p.add_argument("--t", type=int)
    p.add_argument("--delta", help="delta0, delta1, deltaR or an expansion defined in the file")
    p.add_argument("--predicate", default="semiprimary",
                   choices=("semiprimary", "absorbing-primary", "absorbing", "delta-primary", "prime"))
    p.add_argument("--weakly", action="store_true")
    p.add_argument("--strongly", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check-theorems", help="run the theorem suite over a corpus")
    p.add_argument("paths", nargs="*", help="instance files or directories (default: shipped fixtures)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=0, help="random candidates to generate and sweep")
    p.add_argument("--json", metavar="OUT", help="write the JSON report to OUT ('-' for stdout)")
    p.add_argument("--timing", action="store_true", help="append wall-clock figures to the text report")
    p.add_argument("--no-products", action="store_true", help="skip the product-ring family")
    p.set_defaults(func=cmd_check_theorems)

    p = sub.add_parser("construct", help="build a quotient or product and write it as an instance file")
    p.add_argument("kind", choices=("quotient", "product"))
    p.add_argument("inputs", nargs="+", help="quotient: RING IDEAL; product: RING RING [...]")
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--name")
    p.add_argument("--ideal-name", default="P", help="suffix used in coset labels")
    p.set_defaults(func=cmd_construct)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, KrasnerError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
