"""
Command line:

    detourkit analyze <file|-> [--mode certified|witnessed] [--override] [--json]
    detourkit construct --recipe <file> [--certify]
    detourkit verify-block --kind <kind> --graph <file> --distinguished a,b[,c] [--drop m]
    detourkit catalog [<name> [params...]] [--out <file>]
    detourkit search block --kind <kind> [--min-order a] [--max-order b] [--drop m] ...
    detourkit search cnd --max-order <n> [--override] [--no-prune]
    detourkit color -n <n> <file> [--exact]

Reports go to stdout as JSON (analyze prints a summary unless --json);
logging goes to stderr. Exit status: 0 success, 1 a property was refuted,
2 bad usage, bad input or an I/O error.
"""

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from detourkit.catalog.named import catalog_as_dict, named_graph
from detourkit.catalog.search import search_block, search_small_cnd
from detourkit.colouring.colouring import exact_detour_colouring, greedy_detour_colouring, verify_colouring_theorems
from detourkit.config import settings
from detourkit.construction.blocks import BlockKind, verify_block
from detourkit.construction.recipe_file import load_recipe
from detourkit.construction.recipes import construct
from detourkit.detour import engine
from detourkit.detour.modes import Mode, SearchMode
from detourkit.errors import DetourError, Refuted
from detourkit.graphs.io import load_simple, parse_graph_text
from detourkit.graphs.multigraph import MultiGraph, write_multigraph_text
from detourkit.graphs.simple import SimpleGraph
from detourkit.sequences.sequence import analyze_sequence

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_ERROR = 2


def _emit(payload: dict | list) -> None:
    print(json.dumps(payload, indent=2))


def _read_graph(source: str) -> SimpleGraph:
    if source == "-":
        g = parse_graph_text(sys.stdin.read())
        return g.to_simple() if isinstance(g, MultiGraph) else g
    return load_simple(source)


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    if args.mode == Mode.WITNESSED.value:
        mode = SearchMode.witnessed()
    else:
        mode = SearchMode.certified(override=args.override)
    profile = engine.detour_profile(g, mode)
    out = profile.as_dict()
    out["order"] = g.n
    out["size"] = g.size
    out["is_cnd"] = profile.connected and profile.deficiency > 0 and profile.constant
    out["warnings"] = []
    if not profile.connected:
        out["warnings"].append("graph is disconnected; orders are per component")
    if not profile.exact:
        out["warnings"].append("witnessed search: orders are lower bounds")
    if profile.connected and profile.exact:
        out["report"] = analyze_sequence(profile.sequence, g.n, profile.tau).as_dict()
    if args.json:
        _emit(out)
    else:
        print(f"order {g.n}, size {g.size}, tau {profile.tau}, deficiency {profile.deficiency}")
        print(f"sequence {profile.sequence.format()}")
        if out["is_cnd"]:
            print("connected nontraceable detour graph")
        for warning in out["warnings"]:
            print(f"warning: {warning}")
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    recipe = load_recipe(args.recipe)
    report = construct(recipe, certify=args.certify)
    out = report.as_dict()
    if args.out:
        Path(args.out).write_text(report.graph.to_graph6() + "\n")
    _emit(out)
    return EXIT_OK if report.ok else EXIT_REFUTED


def cmd_verify_block(args: argparse.Namespace) -> int:
    g = load_simple(args.graph)
    kind = BlockKind(args.kind)
    try:
        block = verify_block(g, args.distinguished, kind, drop=args.drop, name=Path(args.graph).stem)
    except Refuted as e:
        _emit({"ok": False, "kind": kind.value, "condition": e.condition, "vertex": e.vertex, "detail": e.detail})
        return EXIT_REFUTED
    _emit({"ok": True, **block.as_dict()})
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    if not args.name:
        _emit(catalog_as_dict())
        return EXIT_OK
    g = named_graph(args.name, tuple(args.params))
    text = write_multigraph_text(g) if isinstance(g, MultiGraph) else g.to_graph6() + "\n"
    if args.out:
        Path(args.out).write_text(text)
        logger.info("Wrote %s (order %d, size %d) to %s", args.name, g.n, g.size, args.out)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    if args.what == "block":
        blocks = search_block(
            args.kind,
            min_order=args.min_order,
            max_order=args.max_order,
            drop=args.drop,
            bipartite=args.bipartite,
            girth_min=args.girth_min,
            prune=not args.no_prune,
        )
        _emit([b.as_dict() for b in blocks])
    else:
        found = search_small_cnd(args.max_order, override=args.override, prune=not args.no_prune)
        _emit({"max_order": args.max_order, "found": [g.to_graph6() for g in found]})
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    if not args.exact:
        _emit({"n": args.n, "colouring": greedy_detour_colouring(g, args.n).as_dict()})
        return EXIT_OK
    colouring = exact_detour_colouring(g, args.n)
    report = verify_colouring_theorems(g, args.n)
    _emit({"n": args.n, "colouring": colouring.as_dict(), "theorems": report.as_dict()})
    return EXIT_OK if report.ok else EXIT_REFUTED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="detourkit", description="Longest paths, detour sequences and CND constructions.")
    p.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="Detour profile and sequence report of a graph.")
    a.add_argument("file", help="graph6 or multigraph file, - for stdin")
    a.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.CERTIFIED.value)
    a.add_argument("--override", action="store_true", help="Allow the exhaustive search above the certified limit.")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("construct", help="Build and verify a construction recipe.")
    c.add_argument("--recipe", required=True)
    c.add_argument("--certify", action="store_true", help="Certify exhaustively even above the certified limit.")
    c.add_argument("--out", help="Also write the graph as graph6.")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify-block", help="Check the conditions of a block kind.")
    v.add_argument("--kind", required=True, choices=[k.value for k in BlockKind])
    v.add_argument("--graph", required=True)
    v.add_argument("--distinguished", type=_int_list, default=[])
    v.add_argument("--drop", type=int)
    v.set_defaults(func=cmd_verify_block)

    k = sub.add_parser("catalog", help="Print a named graph, or list the catalog.")
    k.add_argument("name", nargs="?")
    k.add_argument("params", nargs="*", type=int)
    k.add_argument("--out")
    k.set_defaults(func=cmd_catalog)

    s = sub.add_parser("search", help="Exhaustive block or CND search.")
    what = s.add_subparsers(dest="what", required=True)
    sb = what.add_parser("block")
    sb.add_argument("--kind", required=True, choices=[k.value for k in BlockKind])
    sb.add_argument("--min-order", type=int, default=1)
    sb.add_argument("--max-order", type=int, default=6)
    sb.add_argument("--drop", type=int)
    sb.add_argument("--bipartite", action="store_true")
    sb.add_argument("--girth-min", type=int)
    sb.add_argument("--no-prune", action="store_true")
    sc = what.add_parser("cnd")
    sc.add_argument("--max-order", type=int, default=settings.small_cnd_limit)
    sc.add_argument("--override", action="store_true")
    sc.add_argument("--no-prune", action="store_true")
    s.set_defaults(func=cmd_search)

    col = sub.add_parser("color", help="n-detour colouring of a graph.")
    col.add_argument("-n", type=int, required=True)
    col.add_argument("file")
    col.add_argument("--exact", action="store_true", help="Exact colouring plus the bound checks.")
    col.set_defaults(func=cmd_color)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        format="%(asctime)s %(levelname)-5s [%(name)s] %(message)s",
        datefmt="%H:%M:%S",
        level=logging.DEBUG if args.verbose else settings.log_level,
    )
    try:
        return args.func(args)
    except Refuted as e:
        print(f"refuted: {e}", file=sys.stderr)
        return EXIT_REFUTED
    except (DetourError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
