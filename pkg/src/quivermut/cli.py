"""Command-line front end.

Exit codes: 0 success, 1 computation error, 2 usage error.  Subcommands
read and write the versioned JSON formats; `-` means stdin.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import QuivermutError
from .generators import (
    EXCEPTIONAL_NAMES,
    a_n_quiver,
    exceptional_quiver,
    markov_quiver,
    polygon_fan_triangulation,
    qg0_quiver,
    qg0_triangulation,
    qgb_quiver,
    qgb_triangulation,
)
from .mutation_class import (
    DEFAULT_MAX_CLASSES,
    class_report_to_json,
    enumerate_class,
    random_mutation_walk,
    walk_report_to_json,
)
from .quiver import (
    mutate,
    quiver_from_json,
    quiver_to_dot,
    quiver_to_json,
)
from .surface import (
    add_boundary_marked_point,
    add_puncture_on_arc,
    classify_arc,
    flip,
    quiver_of,
    triangulation_from_json,
    triangulation_to_json,
)
from .verify import has_failure, report_to_json, run_claims, standard_claims

GENERATOR_NAMES = ("markov", "qg0", "qgb", "an", "polygon") + tuple(
    f"exceptional:{n}" for n in EXCEPTIONAL_NAMES
)


class _UsageError(Exception):
    """Bad command line beyond what argparse catches itself."""


def _read_source(spec: str) -> str:
    if spec == "-":
        return sys.stdin.read()
    with open(spec, "r", encoding="utf-8") as fh:
        return fh.read()


def _need(args, attr: str, flag: str, what: str):
    value = getattr(args, attr)
    if value is None:
        raise _UsageError(f"{what} requires {flag}")
    return value


def _make_quiver(args):
    name = args.name
    if name == "markov":
        return markov_quiver()
    if name == "qg0":
        return qg0_quiver(_need(args, "g", "--g", "qg0"))
    if name == "qgb":
        return qgb_quiver(_need(args, "g", "--g", "qgb"), _need(args, "b", "--b", "qgb"))
    if name == "an":
        return a_n_quiver(_need(args, "n", "--n", "an"))
    if name == "polygon":
        return quiver_of(polygon_fan_triangulation(_need(args, "m", "--m", "polygon")))
    if name.startswith("exceptional:"):
        return exceptional_quiver(name.split(":", 1)[1])
    raise _UsageError(
        f"unknown generator {name!r}; known: {', '.join(GENERATOR_NAMES)}"
    )


def _emit_quiver(q, dot: bool) -> int:
    print(quiver_to_dot(q) if dot else quiver_to_json(q))
    return 0


def _cmd_gen(args) -> int:
    return _emit_quiver(_make_quiver(args), args.dot)


def _cmd_mutate(args) -> int:
    q = quiver_from_json(_read_source(args.source))
    vertices = list(args.at or [])
    for chunk in args.seq or []:
        try:
            vertices += [int(tok) for tok in chunk.split(",") if tok != ""]
        except ValueError:
            raise _UsageError(f"--seq wants comma-separated integers, got {chunk!r}")
    if not vertices:
        raise _UsageError("mutate requires --at k (repeatable) or --seq k1,k2,...")
    for k in vertices:
        q = mutate(q, k)
    return _emit_quiver(q, args.dot)


def _cmd_class(args) -> int:
    q = quiver_from_json(_read_source(args.source))
    report = enumerate_class(q, max_classes=args.max_classes)
    print(class_report_to_json(report))
    return 0


def _cmd_walk(args) -> int:
    q = quiver_from_json(_read_source(args.source))
    print(walk_report_to_json(random_mutation_walk(q, args.steps, args.seed)))
    return 0


def _make_triangulation(args):
    name = args.name
    if name == "polygon":
        return polygon_fan_triangulation(_need(args, "m", "--m", "polygon"))
    if name == "qg0":
        return qg0_triangulation(_need(args, "g", "--g", "qg0"))
    if name == "qgb":
        return qgb_triangulation(
            _need(args, "g", "--g", "qgb"), _need(args, "b", "--b", "qgb")
        )
    raise _UsageError(
        f"unknown triangulation generator {name!r}; known: polygon, qg0, qgb"
    )


def _cmd_tri_gen(args) -> int:
    print(triangulation_to_json(_make_triangulation(args)))
    return 0


def _cmd_tri_flip(args) -> int:
    t = triangulation_from_json(_read_source(args.source))
    print(triangulation_to_json(flip(t, args.arc)))
    return 0


def _cmd_tri_quiver(args) -> int:
    t = triangulation_from_json(_read_source(args.source))
    return _emit_quiver(quiver_of(t), args.dot)


def _cmd_tri_classify(args) -> int:
    t = triangulation_from_json(_read_source(args.source))
    if args.arc is not None:
        print(json.dumps({"arc": args.arc, "case": classify_arc(t, args.arc)}))
    else:
        cases = {str(a): classify_arc(t, a) for a in t.arc_ids()}
        print(json.dumps({"cases": cases}))
    return 0


def _cmd_tri_addp(args) -> int:
    t = triangulation_from_json(_read_source(args.source))
    t2, mid = add_puncture_on_arc(t, args.arc)
    print(f"new arc {mid}", file=sys.stderr)
    print(triangulation_to_json(t2))
    return 0


def _cmd_tri_addb(args) -> int:
    t = triangulation_from_json(_read_source(args.source))
    t2, new_arc = add_boundary_marked_point(t, args.triangle)
    print(f"new arc {new_arc}", file=sys.stderr)
    print(triangulation_to_json(t2))
    return 0


def _cmd_verify(args) -> int:
    ids = None
    if args.claims:
        ids = [tok for chunk in args.claims for tok in chunk.split(",") if tok]
        known = {cid for cid, _ in standard_claims()}
        families = {cid.split("/", 1)[0] for cid in known}
        for w in ids:
            if w not in known and w not in families:
                raise _UsageError(
                    f"unknown claim id {w!r}; known: {', '.join(sorted(known))}"
                )
    results = run_claims(ids, seed=args.seed)
    print(report_to_json(results))
    return 1 if has_failure(results) else 0


def _cmd_serve(args) -> int:
    from .service import serve

    port = args.port
    if os.environ.get("QML_PORT"):
        port = int(os.environ["QML_PORT"])
    serve(port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quivermut",
        description="Quiver mutation, surface triangulations and class exploration.",
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("gen", help="emit a named quiver")
    p.add_argument("name", help=f"one of: {', '.join(GENERATOR_NAMES)}")
    p.add_argument("--g", type=int, help="genus")
    p.add_argument("--b", type=int, help="boundary components")
    p.add_argument("--n", type=int, help="path length")
    p.add_argument("--m", type=int, help="polygon marked points")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("mutate", help="mutate a quiver at one or more vertices")
    p.add_argument("source", help="quiver JSON file, or - for stdin")
    p.add_argument("--at", type=int, action="append", help="vertex (repeatable)")
    p.add_argument("--seq", action="append", help="comma-separated vertex sequence")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.set_defaults(func=_cmd_mutate)

    p = sub.add_parser("class", help="enumerate the mutation class")
    p.add_argument("source", help="quiver JSON file, or - for stdin")
    p.add_argument("--max-classes", type=int, default=DEFAULT_MAX_CLASSES)
    p.set_defaults(func=_cmd_class)

    p = sub.add_parser("walk", help="seeded random mutation walk")
    p.add_argument("source", help="quiver JSON file, or - for stdin")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_walk)

    tri = sub.add_parser("tri", help="triangulation operations")
    tsub = tri.add_subparsers(dest="tri_command")

    p = tsub.add_parser("gen", help="emit a named triangulation")
    p.add_argument("name", help="one of: polygon, qg0, qgb")
    p.add_argument("--g", type=int, help="genus")
    p.add_argument("--b", type=int, help="boundary components")
    p.add_argument("--m", type=int, help="polygon marked points")
    p.set_defaults(func=_cmd_tri_gen)

    p = tsub.add_parser("flip", help="flip an arc")
    p.add_argument("source", help="triangulation JSON file, or - for stdin")
    p.add_argument("--arc", type=int, required=True)
    p.set_defaults(func=_cmd_tri_flip)

    p = tsub.add_parser("quiver", help="quiver of a triangulation")
    p.add_argument("source", help="triangulation JSON file, or - for stdin")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.set_defaults(func=_cmd_tri_quiver)

    p = tsub.add_parser("classify", help="classify arcs by local shape")
    p.add_argument("source", help="triangulation JSON file, or - for stdin")
    p.add_argument("--arc", type=int)
    p.set_defaults(func=_cmd_tri_classify)

    p = tsub.add_parser("addp", help="add a puncture splitting an arc")
    p.add_argument("source", help="triangulation JSON file, or - for stdin")
    p.add_argument("--arc", type=int, required=True)
    p.set_defaults(func=_cmd_tri_addp)

    p = tsub.add_parser("addb", help="add a boundary marked point")
    p.add_argument("source", help="triangulation JSON file, or - for stdin")
    p.add_argument("--triangle", type=int, required=True)
    p.set_defaults(func=_cmd_tri_addb)

    p = sub.add_parser("verify", help="run the claim battery")
    p.add_argument("--claims", action="append", help="comma-separated claim ids")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("serve", help="run the local HTTP service")
    p.add_argument("--port", type=int, default=8763)
    p.set_defaults(func=_cmd_serve)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed its message; --help exits 0
        return 0 if exc.code in (0, None) else 2
    if getattr(args, "func", None) is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (QuivermutError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
