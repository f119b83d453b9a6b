"""Command-line interface.

Subcommands::

    realearn least INPUT    learn the least of the document's reals
    realearn convex INPUT   construct a bounding angle for the points
    realearn check RESULT INPUT   audit a convex result file
    realearn tree TRACE...  replay recorded traces against the tree

Exit codes: 0 success, 1 input error, 2 restart budget exhausted,
3 degenerate geometry, 4 verification failure.  The ``--kmax`` default
is 256 and can be overridden by the ``REALEARN_KMAX`` environment
variable; an explicit flag wins over the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional, Sequence

from .convex import CertificateFailure, convex_angle, verify_bounding
from .geometry import DegenerateInput
from .inputs import (
    InputError,
    build_points,
    build_reals,
    load_document,
    load_script,
    rational_points,
    real_limits,
)
from .knowledge import empty_state
from .least import NullAuditor, RestartBudgetExceeded, ScriptedAuditor, learn_least
from .oracle import (
    OracleAuditor,
    PathMismatch,
    TieDetected,
    exact_convex_check,
    replay_paths,
)
from .trace import TraceLog, read_trace, state_snapshot, write_trace

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2
EXIT_DEGENERATE = 3
EXIT_VERIFY = 4

DEFAULT_KMAX = 256
KMAX_ENV = "REALEARN_KMAX"


def _resolve_kmax(flag: Optional[int]) -> int:
    if flag is not None:
        return flag
    raw = os.environ.get(KMAX_ENV)
    if raw is None:
        return DEFAULT_KMAX
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{KMAX_ENV} must be an integer, got {raw!r}")
    if value < 0:
        raise InputError(f"{KMAX_ENV} must be >= 0, got {value}")
    return value


def _print_state(state) -> None:
    print("state:", json.dumps(state_snapshot(state),
                               sort_keys=True, separators=(",", ":")))


def cmd_least(args) -> int:
    kmax = _resolve_kmax(args.kmax)
    document = load_document(args.input)
    if not document.reals:
        raise InputError(f"{args.input}: no reals in document")
    registry, _ = build_reals(document)
    n = len(document.reals) - 1
    budget = args.max_restarts if args.max_restarts is not None else 2 ** n
    if args.auditor == "none":
        auditor = NullAuditor()
    elif args.auditor == "oracle":
        try:
            auditor = OracleAuditor(registry, real_limits(document))
        except TieDetected as exc:
            raise InputError(f"oracle auditor: {exc}")
    elif args.auditor.startswith("script:"):
        script = load_script(args.auditor[len("script:"):])
        for ch in script:
            if ch.precision > kmax:
                raise InputError(
                    f"challenge precision {ch.precision} exceeds kmax {kmax}")
        auditor = ScriptedAuditor(script)
    else:
        raise InputError(f"unknown auditor {args.auditor!r}")
    log = TraceLog()
    try:
        outcome = learn_least(n, auditor, empty_state(registry), budget, log)
    except RestartBudgetExceeded as exc:
        if args.trace:
            write_trace(args.trace, log.events)
        print(f"restart budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if args.trace:
        write_trace(args.trace, outcome.trace)
    print(f"candidate: {outcome.candidate.candidate}")
    print(f"restarts: {outcome.restarts}")
    _print_state(outcome.state)
    return EXIT_OK


def _certificate_obj(certificate) -> dict:
    return {
        "left": [[d, w] for d, w in sorted(certificate.left.items())],
        "right": [[d, w] for d, w in sorted(certificate.right.items())],
        "c_left": certificate.c_left,
        "b_right": certificate.b_right,
    }


def cmd_convex(args) -> int:
    kmax = _resolve_kmax(args.kmax)
    document = load_document(args.input)
    if not document.points:
        raise InputError(f"{args.input}: no points in document")
    registry, points = build_points(document)
    log = TraceLog()
    try:
        result = convex_angle(points, k_max=kmax,
                              max_restarts=args.max_restarts, trace=log)
    except RestartBudgetExceeded as exc:
        if args.trace:
            write_trace(args.trace, log.events)
        print(f"restart budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except DegenerateInput as exc:
        if args.trace:
            write_trace(args.trace, log.events)
        print(f"degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    if args.trace:
        write_trace(args.trace, result.trace)
    witnesses = [result.certificate.c_left, result.certificate.b_right]
    witnesses.extend(result.certificate.left.values())
    witnesses.extend(result.certificate.right.values())
    print(f"apex: {result.a}")
    print(f"rays: {result.b} {result.c}")
    print(f"restarts: {result.restarts}")
    print(f"max-witness: {max(witnesses)}")
    _print_state(result.state)
    if args.result:
        record = {
            "type": "convex-result",
            "a": result.a,
            "b": result.b,
            "c": result.c,
            "kmax": kmax,
            "restarts": result.restarts,
            "certificate": _certificate_obj(result.certificate),
            "state": state_snapshot(result.state),
        }
        with open(args.result, "w", encoding="utf-8") as handle:
            handle.write(json.dumps(record, sort_keys=True,
                                    separators=(",", ":")))
            handle.write("\n")
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        with open(args.result, "r", encoding="utf-8") as handle:
            record = json.loads(handle.read())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{args.result}: cannot read result: {exc}")
    if not isinstance(record, dict) or record.get("type") != "convex-result":
        raise InputError(f"{args.result}: not a convex result file")
    document = load_document(args.input)
    if not document.points:
        raise InputError(f"{args.input}: no points in document")
    _, points = build_points(document)
    a, b, c = record.get("a"), record.get("b"), record.get("c")
    if not all(isinstance(v, int) for v in (a, b, c)):
        raise InputError(f"{args.result}: a, b, c must be integers")
    kmax = args.kmax if args.kmax is not None else record.get("kmax", DEFAULT_KMAX)
    try:
        derived = verify_bounding(points, a, b, c, k_max=kmax)
    except CertificateFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    stored = record.get("certificate")
    if stored is not None and stored != _certificate_obj(derived):
        print("verification failed: stored certificate does not match "
              "re-derived witnesses", file=sys.stderr)
        return EXIT_VERIFY
    limits = rational_points(document)
    if not exact_convex_check(limits, a, b, c):
        print("verification failed: exact bounding condition is false "
              f"for apex {a}, rays {b}, {c}", file=sys.stderr)
        return EXIT_VERIFY
    print(f"ok: apex {a}, rays {b} {c}, "
          f"{len(derived.left)} bounded points re-verified")
    return EXIT_OK


def cmd_tree(args) -> int:
    runs = [read_trace(path) for path in args.traces]
    try:
        verdict = replay_paths(runs, n=args.n)
    except PathMismatch as exc:
        print(f"replay failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    print(f"n: {verdict.n}")
    for path, run in zip(args.traces, verdict.runs):
        print(f"run: {path}")
        print(f"  leaves: {' '.join(map(str, run.leaf_ranks))}")
        print(f"  candidates: {' '.join(map(str, run.leaf_candidates))}")
        print(f"  restarts: {run.restarts}")
        print(f"  progress: {'ok' if run.progress_ok else 'VIOLATED'}")
        print(f"  unique: {'ok' if run.unique_ok else 'VIOLATED'}")
        print(f"  bound: {'ok' if run.bound_ok else 'VIOLATED'}")
    return EXIT_OK if verdict.ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realearn",
        description="Exact reals, least-element learning, convex angles.")
    sub = parser.add_subparsers(dest="command", required=True)

    least = sub.add_parser("least", help="learn the least element")
    least.add_argument("input")
    least.add_argument("--kmax", type=int, default=None,
                       help="precision ceiling for scripted challenges "
                            "(default 256, or REALEARN_KMAX)")
    least.add_argument("--max-restarts", type=int, default=None,
                       help="restart budget (default 2^n)")
    least.add_argument("--auditor", default="none",
                       help="none | oracle | script:<path>")
    least.add_argument("--trace", default=None,
                       help="write the event trace to this file")
    least.set_defaults(func=cmd_least)

    convex = sub.add_parser("convex", help="construct a bounding angle")
    convex.add_argument("input")
    convex.add_argument("--kmax", type=int, default=None,
                        help="precision budget for side decisions "
                             "(default 256, or REALEARN_KMAX)")
    convex.add_argument("--max-restarts", type=int, default=None,
                        help="restart budget (default 2^n)")
    convex.add_argument("--trace", default=None,
                        help="write the event trace to this file")
    convex.add_argument("--result", default=None,
                        help="write a machine-readable result record")
    convex.set_defaults(func=cmd_convex)

    check = sub.add_parser("check", help="audit a convex result file")
    check.add_argument("result")
    check.add_argument("input")
    check.add_argument("--kmax", type=int, default=None,
                       help="re-verification budget (default: the "
                            "kmax recorded in the result file)")
    check.set_defaults(func=cmd_check)

    tree = sub.add_parser("tree", help="replay traces against the tree")
    tree.add_argument("traces", nargs="+")
    tree.add_argument("--n", type=int, default=None,
                      help="decision path length; inferred from the "
                           "first trace when omitted")
    tree.set_defaults(func=cmd_tree)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
