"""Command-line front-end.

Exit codes: 0 success (including a clean UNSAT), 1 I/O or parse failure,
2 structural precondition failure (with a witness when available),
3 solver cap exceeded, 4 invalid coloring in `verify`.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .coloring import SPEC_1122, SPackingSpec, parse_coloring_lines
from .colorer import color_claw_free_cubic
from .errors import (
    CapExceededError,
    ClawcolorError,
    DisconnectedError,
    InfeasibleSpecError,
    MalformedInputError,
    NotClawFreeError,
    NotCubicError,
    NotSimpleError,
    PartialColoringError,
)
from .formats import emit_edgelist, emit_graph6, parse_edgelist, parse_graph6
from .generators import (
    expand_to_clawfree,
    gen_bridged,
    gen_cubic_multigraph,
    gen_ring_of_diamonds,
    random_expansion_spec,
)
from .multigraph import MultiGraph
from .oracle import solve_spacking, verify
from .recognition import ComponentKind, build_bridge_tree, find_bridges
from .rng import SplitMix64
from .structure import Variant, oum_decompose

EXIT_OK = 0
EXIT_IO = 1
EXIT_PRECONDITION = 2
EXIT_CAP = 3
EXIT_INVALID_COLORING = 4


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str, fmt: str) -> MultiGraph:
    text = _read_text(path)
    if fmt == "auto":
        fmt = "graph6" if path.endswith((".g6", ".graph6")) else "edgelist"
    if fmt == "graph6":
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        return parse_graph6(first)
    return parse_edgelist(text)


def _parse_spec(text: str) -> SPackingSpec:
    try:
        radii = tuple(int(x) for x in text.split(","))
        return SPackingSpec(radii)
    except ValueError as exc:
        raise MalformedInputError(f"bad spec {text!r}: {exc}") from exc


def _color_one(path: str, fmt: str) -> dict:
    started = time.perf_counter()
    report: dict = {"input": path, "outcome": "error"}
    try:
        g = _load_graph(path, fmt)
    except (OSError, MalformedInputError) as exc:
        report["error"] = {"kind": "io", "message": str(exc)}
        report["exit"] = EXIT_IO
        return report
    report["n"] = g.n
    try:
        coloring = color_claw_free_cubic(g)
    except NotClawFreeError as exc:
        report["error"] = {
            "kind": "not-claw-free",
            "message": str(exc),
            "witness": list(exc.witness),
        }
        report["exit"] = EXIT_PRECONDITION
        return report
    except (NotCubicError, DisconnectedError, NotSimpleError) as exc:
        report["error"] = {"kind": "precondition", "message": str(exc)}
        report["exit"] = EXIT_PRECONDITION
        return report
    except ClawcolorError as exc:
        report["error"] = {"kind": type(exc).__name__, "message": str(exc)}
        report["exit"] = EXIT_PRECONDITION
        return report
    violations = verify(g, SPEC_1122, coloring)
    report["elapsed_s"] = round(time.perf_counter() - started, 6)
    if violations:
        # unreachable: the constructor verifies before returning
        report["error"] = {"kind": "verification", "message": f"{len(violations)} violations"}
        report["exit"] = EXIT_INVALID_COLORING
        return report
    report["outcome"] = "colored"
    report["coloring"] = {str(v): coloring.label(v) for v in sorted(coloring.assignment)}
    report["verified"] = True
    report["exit"] = EXIT_OK
    return report


def cmd_color(args) -> int:
    paths = args.paths
    if args.jobs > 1 and len(paths) > 1 and "-" not in paths:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_color_one, paths, [args.format] * len(paths)))
    else:
        reports = [_color_one(p, args.format) for p in paths]
    worst = EXIT_OK
    for report in reports:
        if args.json:
            print(json.dumps(report, indent=2, sort_keys=True))
        elif report["outcome"] == "colored":
            if len(reports) > 1:
                print(f"# {report['input']}")
            for v, label in report["coloring"].items():
                print(f"{v} {label}")
            print("VERIFIED" if report["verified"] else "INVALID")
        else:
            err = report["error"]
            msg = f"error ({err['kind']}): {err['message']}"
            if "witness" in err:
                msg += f" [witness: {err['witness']}]"
            print(f"{report['input']}: {msg}", file=sys.stderr)
        worst = max(worst, report["exit"])
    return worst


def cmd_solve(args) -> int:
    try:
        spec = _parse_spec(args.spec)
        g = _load_graph(args.path, args.format)
    except (OSError, MalformedInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        coloring = solve_spacking(g, spec, cap=args.cap)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    if coloring is None:
        print("UNSAT")
        return EXIT_OK
    sys.stdout.write(coloring.as_lines())
    print("SAT")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        spec = _parse_spec(args.spec)
        g = _load_graph(args.graph, args.format)
        coloring = parse_coloring_lines(_read_text(args.coloring), spec)
    except (OSError, MalformedInputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        violations = verify(g, spec, coloring)
    except PartialColoringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    if not violations:
        print("OK")
        return EXIT_OK
    for vio in violations:
        print(
            f"violation: class {vio.label} vertices {vio.pair[0]} and "
            f"{vio.pair[1]} at distance {vio.distance}"
        )
    return EXIT_INVALID_COLORING


def cmd_generate(args) -> int:
    rng = SplitMix64(args.seed)
    try:
        if args.kind == "ring":
            g = gen_ring_of_diamonds(args.k)
        elif args.kind == "multigraph":
            g = gen_cubic_multigraph(args.n, rng)
        elif args.kind == "expansion":
            h = gen_cubic_multigraph(args.n, rng)
            g = expand_to_clawfree(h, random_expansion_spec(h, rng, args.max_string), rng)
        elif args.kind == "bridged":
            spec = _parse_tree_spec(args.tree)
            g = gen_bridged(spec, rng)
        else:
            raise InfeasibleSpecError(f"unknown kind {args.kind!r}")
    except ClawcolorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    text = emit_graph6(g) + "\n" if args.graph6 else emit_edgelist(g)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


def _parse_tree_spec(text: str) -> list[tuple[str, int]]:
    """Parse e.g. "k3:3,type3:1,type3:1,type3:1" into component specs."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" not in part:
            raise MalformedInputError(f"bad component spec {part!r}, want kind:attachments")
        kind, _, num = part.partition(":")
        try:
            out.append((kind.strip(), int(num)))
        except ValueError:
            raise MalformedInputError(f"bad attachment count in {part!r}") from None
    return out


def _tree_shape(adj: tuple[tuple[int, ...], ...]) -> str:
    n = len(adj)
    if n == 1:
        return "K_1"
    if n == 2:
        return "K_2"
    degs = sorted(len(a) for a in adj)
    if degs[-1] == n - 1:
        return f"K_{{1,{n - 1}}}"
    if degs[-1] <= 2:
        return f"P_{n}"
    return f"tree on {n} nodes, degrees {degs}"


def cmd_decompose(args) -> int:
    try:
        g = _load_graph(args.path, args.format)
    except (OSError, MalformedInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        bridges = find_bridges(g)
        if bridges:
            bt = build_bridge_tree(g)
            print(f"bridges: {len(bt.bridges)}")
            print(f"bridge tree: {_tree_shape(bt.tree_adj)} (root component {bt.root})")
            kind_names = {
                ComponentKind.TRIANGLE: "K3",
                ComponentKind.DIAMOND: "diamond",
                ComponentKind.TYPE_III: "TypeIII",
            }
            for i, comp in enumerate(bt.components):
                tag = " (root)" if i == bt.root else ""
                print(
                    f"component {i}: {kind_names[bt.kinds[i]]}, {len(comp)} vertices, "
                    f"depth {bt.depth[i]}{tag}"
                )
        else:
            dec = oum_decompose(g)
            if dec.variant is Variant.K4:
                print("2-edge-connected: K4")
            elif dec.variant is Variant.RING:
                print(f"2-edge-connected: ring of {len(dec.ring_diamonds)} diamonds")
            else:
                pairs = dec.h.edge_pairs()
                doubles = sum(1 for _, _, m in pairs if m >= 2)
                lengths = dec.string_lengths()
                print(
                    f"2-edge-connected: built from H with {dec.h.n} vertices, "
                    f"{dec.h.size} edges ({doubles} parallel pair(s)), "
                    f"strings: {lengths if lengths else 'none'}"
                )
    except ClawcolorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clawcolor",
        description="(1,1,2,2)-packing colorings of claw-free cubic graphs",
    )
    parser.add_argument("--version", action="version", version=f"clawcolor {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="construct and verify a (1,1,2,2)-coloring")
    p.add_argument("paths", nargs="+", help="input file(s); '-' for stdin")
    p.add_argument("--format", choices=("auto", "edgelist", "graph6"), default="auto")
    p.add_argument("--json", action="store_true", help="emit one JSON report per input")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers over input files")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("solve", help="decide S-packing colorability exactly")
    p.add_argument("path")
    p.add_argument("--format", choices=("auto", "edgelist", "graph6"), default="auto")
    p.add_argument("--spec", default="1,1,2,2", help="comma-separated radii")
    p.add_argument("--cap", type=int, default=40, help="vertex-count cap")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--format", choices=("auto", "edgelist", "graph6"), default="auto")
    p.add_argument("--spec", default="1,1,2,2")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a generated graph")
    p.add_argument("kind", choices=("ring", "multigraph", "expansion", "bridged"))
    p.add_argument("--k", type=int, default=3, help="ring: diamond count")
    p.add_argument("--n", type=int, default=6, help="multigraph/expansion: H order")
    p.add_argument("--max-string", type=int, default=2, dest="max_string")
    p.add_argument("--tree", default="type3:1,type3:1", help="bridged: kind:attach list")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--graph6", action="store_true")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("decompose", help="report bridge tree / structure variant")
    p.add_argument("path")
    p.add_argument("--format", choices=("auto", "edgelist", "graph6"), default="auto")
    p.set_defaults(func=cmd_decompose)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
