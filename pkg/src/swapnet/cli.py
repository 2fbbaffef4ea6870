"""Command-line interface: ``swapnet generate|check-sse|check-local|analyze|dynamics|experiment``.

Exit codes: 0 pass, 1 criterion failure (or "not an equilibrium" for the
check commands), 2 usage or parse error.  ``SWAPNET_SEED`` supplies the
default seed.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import generators as gen
from .dynamics import DynamicsConfig, run
from .edgelist import format_edgelist, read_edgelist
from .errors import SwapnetError
from .experiments import SUITES, run_experiment
from .graph import is_connected
from .localgame import check_local_equilibrium
from .localgame import report_to_json as local_json
from .structure import all_checks_hold, analyze
from .sumgame import check_sse
from .sumgame import report_to_json as sse_json


def _default_seed() -> int:
    raw = os.environ.get("SWAPNET_SEED")
    return int(raw) if raw else 0


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_generate(args) -> int:
    params = {}
    for item in args.param:
        key, _, val = item.partition("=")
        params[key.replace("-", "_")] = val
    spec = gen.GeneratorSpec(args.family, params, args.seed)
    g = gen.generate(spec)
    text = format_edgelist(g)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_check_sse(args) -> int:
    g = read_edgelist(args.edgelist)
    rep = check_sse(g, exhaustive=args.exhaustive)
    doc = sse_json(g, rep)
    if args.json:
        print(_dump(doc))
    else:
        print(f"n={g.n} m={g.num_edges} sum-swap equilibrium: {rep.is_equilibrium}")
        if rep.witness is not None:
            p, r, a = rep.witness
            print(f"witness: vertex {p} swaps {r} -> {a} (cost change {doc['witness']['delta']})")
    return 0 if rep.is_equilibrium else 1


def cmd_check_local(args) -> int:
    g = read_edgelist(args.edgelist)
    rep = check_local_equilibrium(g)
    doc = local_json(g, rep)
    if args.json:
        print(_dump(doc))
    else:
        print(f"local equilibrium: {doc['is_equilibrium']}  spanning star: {doc['has_spanning_star']}  "
              f"potential: {doc['potential']}")
        if rep.witness is not None:
            p, r, a = rep.witness
            print(f"witness: vertex {p} swaps {r} -> {a} (profit change +{rep.delta})")
    return 0 if rep.is_equilibrium else 1


def cmd_analyze(args) -> int:
    g = read_edgelist(args.edgelist)
    if not is_connected(g):
        print("error: analyze needs a connected graph", file=sys.stderr)
        return 2
    doc = analyze(g, ks=args.k)
    if args.json:
        print(_dump(doc))
    else:
        for key, val in doc.items():
            print(f"{key}: {json.dumps(val, sort_keys=True)}")
    # a failed checker only counts as a failure on an actual SSE graph
    return 1 if doc["sse"] and not all_checks_hold(doc) else 0


def cmd_dynamics(args) -> int:
    g = read_edgelist(args.edgelist)
    cfg = DynamicsConfig(
        mode="query" if args.mode == "query" else "full",
        c=args.c,
        policy=args.policy,
        seed=args.seed,
        max_steps=args.max_steps,
        silence_window=args.silence_window,
        scheduler=args.scheduler,
        halt_on_silence=not args.no_halt_on_silence,
    )
    tr = run(g, cfg)
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.write(tr.to_jsonl())
    print(_dump(tr.summary()))
    return 0


def cmd_experiment(args) -> int:
    params = json.loads(args.params) if args.params else {}
    rep = run_experiment(args.suite, params, args.seed)
    doc = rep.to_json(timings=not args.no_timings)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(_dump(doc) + "\n")
    if args.json:
        print(_dump(doc))
    else:
        print("\n".join(rep.summary_lines()))
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    seed = _default_seed()
    p = argparse.ArgumentParser(prog="swapnet", description="Swap-based network creation games.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a generated graph as an edge list")
    g.add_argument("family", choices=gen.FAMILIES)
    g.add_argument("param", nargs="*", help="key=value, e.g. n=10 p=0.3")
    g.add_argument("--seed", type=int, default=seed)
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("check-sse", help="brute-force sum-swap equilibrium test")
    s.add_argument("edgelist")
    s.add_argument("--exhaustive", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_check_sse)

    lc = sub.add_parser("check-local", help="local-cost equilibrium test")
    lc.add_argument("edgelist")
    lc.add_argument("--json", action="store_true")
    lc.set_defaults(func=cmd_check_local)

    a = sub.add_parser("analyze", help="run the structural checkers")
    a.add_argument("edgelist")
    a.add_argument("--k", type=_int_list, default=[1, 2])
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    d = sub.add_parser("dynamics", help="run better-response or limited-query dynamics")
    d.add_argument("edgelist")
    d.add_argument("--mode", choices=["full", "query"], default="full")
    d.add_argument("--c", type=int, default=1)
    d.add_argument("--policy", choices=["first", "best", "random"], default="first")
    d.add_argument("--scheduler", choices=["round-robin", "random"], default="round-robin")
    d.add_argument("--seed", type=int, default=seed)
    d.add_argument("--max-steps", type=int)
    d.add_argument("--silence-window", type=int)
    d.add_argument("--no-halt-on-silence", action="store_true")
    d.add_argument("--trace")
    d.add_argument("--json", action="store_true", help="accepted for uniformity; output is always JSON")
    d.set_defaults(func=cmd_dynamics)

    e = sub.add_parser("experiment", help="run an evidence suite")
    e.add_argument("suite", choices=SUITES)
    e.add_argument("--params", help="JSON object of suite parameters")
    e.add_argument("--seed", type=int, default=seed)
    e.add_argument("--out")
    e.add_argument("--json", action="store_true")
    e.add_argument("--no-timings", action="store_true")
    e.set_defaults(func=cmd_experiment)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (SwapnetError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
