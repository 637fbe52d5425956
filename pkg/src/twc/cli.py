"""Command-line front end.

Exit status: 0 answered or certified, 1 error, 2 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
import time
from typing import Any, Sequence

from .choosability import (
    check_12_certificate,
    classify_family,
    find_proper_weighting,
    random_lists,
)
from .errors import GraphError, ParseError, ResourceLimitError, VerificationError
from .fixtures import FIXTURES, fixture
from .graph import Graph, classify, orient
from .io import format_edge_list, parse_list_assignment, parse_orientation, read_graph_arg
from .matchings import count_perfect_matchings, count_pm_line_graph, dong_tree_formula, split_recursion
from .matrices import LabeledIntMatrix, build_A, build_B
from .permanent import permanent, permanent_naive
from .pind import certify_pindA, pind_exhaustive, reduce_for_pindB

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2


def _kind(g: Graph) -> str:
    if not g.is_connected():
        return "disconnected"
    return classify(g).kind


def _input_summary(g: Graph) -> dict:
    return {"n": g.n, "m": g.m, "kind": _kind(g)}


def _orientation(g: Graph, path: str | None):
    if not path:
        return orient(g)
    with open(path, encoding="utf-8") as fh:
        return parse_orientation(fh.read(), g, path)


def _cmd_matrix(args) -> tuple[dict | None, Any, bool]:
    g = read_graph_arg(args.graph)
    d = _orientation(g, args.orient)
    mat = build_A(d) if args.which == "A" else build_B(d)
    return _input_summary(g), {"matrix": mat.to_dict(), "heads": list(d.heads)}, True


def _load_matrix_or_graph(target: str):
    if os.path.exists(target):
        with open(target, encoding="utf-8") as fh:
            text = fh.read()
        if any(line.strip().startswith("# rows:") for line in text.splitlines()):
            return LabeledIntMatrix.from_text(text, target), None
    g = read_graph_arg(target)
    return build_B(orient(g)), g


def _cmd_permanent(args):
    if args.fixture:
        mat, g = fixture(args.fixture), None
        source = f"fixture:{args.fixture}"
    elif args.target:
        mat, g = _load_matrix_or_graph(args.target)
        source = "per(B_G)" if g is not None else "matrix file"
    else:
        raise GraphError("permanent needs a matrix/graph argument or --fixture")
    if not mat.is_square:
        raise GraphError(f"permanent needs a square matrix, got {mat.shape[0]}x{mat.shape[1]}")
    value = permanent_naive(mat) if args.naive else permanent(mat)
    summary = _input_summary(g) if g is not None else None
    return summary, {"permanent": value, "side": mat.shape[0], "source": source}, True


def _cmd_matchings(args):
    g = read_graph_arg(args.graph)
    result: dict = {}
    if args.line_graph:
        result["M(L(G))"] = count_pm_line_graph(g)
    else:
        result["M(G)"] = count_perfect_matchings(g)
    if args.dong:
        result["dong_formula"] = dong_tree_formula(g)
    return _input_summary(g), result, True


def _cmd_split(args):
    g = read_graph_arg(args.graph)
    try:
        u, v = (int(x) for x in args.edge.split(","))
    except ValueError:
        raise GraphError(f"--edge expects 'u,v', got {args.edge!r}") from None
    rec = split_recursion(g, g.edge_index(u, v))
    result = {
        "edge": [rec.u, rec.v],
        "M(L(G))": rec.lhs,
        "M(L(G(u,w)))": rec.rhs_u,
        "M(L(G(v,w)))": rec.rhs_v,
        "holds": rec.holds,
    }
    return _input_summary(g), result, True


def _cmd_pind(args):
    g = read_graph_arg(args.graph)
    summary = _input_summary(g)
    if args.method == "exhaustive":
        d = _orientation(g, args.orient)
        mat = build_A(d) if args.which == "A" else build_B(d)
        res = pind_exhaustive(mat, args.max)
        return summary, res.to_dict(), True
    if args.method == "certify":
        if args.which != "A" or args.max < 1:
            raise GraphError("--method certify certifies pind(A_G) = 1; use 'pind A'")
        cert = certify_pindA(g)
    else:
        if args.which != "B" or args.max < 2:
            raise GraphError("--method reduce certifies pind(B_G) <= 2; use 'pind B --max 2'")
        cert = reduce_for_pindB(g)
    return summary, cert.to_dict(), cert.certified


def _cmd_classify(args):
    g = read_graph_arg(args.graph)
    cls = classify(g)
    result: dict = {"classification": cls.to_dict()}
    if cls.kind not in ("tree", "other"):
        result["family"] = classify_family(g).to_dict()
    return _input_summary(g), result, True


def _cert_22(g: Graph):
    if g.is_connected() and g.m <= g.n + 1:
        return certify_pindA(g)
    from .certificate import Certificate

    res = pind_exhaustive(build_A(orient(g)), 1)
    witness = {"graph": g.to_dict(), "multiplicities": res.multiplicities}
    if res.achieved == 1 or res.achieved == 0:
        return Certificate("pind(A_G)=1", "exhaustive", witness, [], res.permanent_value)
    return Certificate("pind(A_G)=1", "exhaustive", witness, [], None, status="inconclusive")


def _cmd_check(args):
    g = read_graph_arg(args.graph)
    summary = _input_summary(g)
    if args.which == "12":
        cert = check_12_certificate(g, _orientation(g, args.orient))
        implies = "(1,2)-choosable"
    elif args.which == "22":
        cert = _cert_22(g)
        implies = "(2,2)-choosable"
    else:
        cert = reduce_for_pindB(g)
        implies = "(1,3)-choosable"
    result = cert.to_dict()
    result["implies"] = implies if cert.certified else None
    return summary, result, cert.certified


def _cmd_weighting(args):
    g = read_graph_arg(args.graph)
    if args.lists:
        with open(args.lists, encoding="utf-8") as fh:
            lists = parse_list_assignment(fh.read(), g, args.lists)
    elif args.random:
        try:
            k, kp = (int(x) for x in args.random.split(","))
        except ValueError:
            raise GraphError(f"--random expects 'k,kp', got {args.random!r}") from None
        lists = random_lists(g, k, kp, random.Random(args.seed))
    else:
        raise GraphError("weighting needs --lists <file> or --random k,kp")
    probe: dict = {}
    w = find_proper_weighting(g, lists, probe=probe)
    result = {
        "lists": lists.to_dict(),
        "weighting": w.to_dict() if w else None,
        "verdict": "proper weighting found" if w else "none exists for this L",
        "searched": probe.get("covered"),
        "space": probe.get("space"),
    }
    return _input_summary(g), result, True


def _cmd_family(args):
    g = read_graph_arg(args.spec)
    return _input_summary(g), {"graph": g.to_dict(), "edge_list": format_edge_list(g)}, True


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twc", description="Total weight choosability toolkit")
    p.add_argument("--json", action="store_true", help="emit the report as canonical JSON")
    p.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("matrix", help="print A_G or B_G")
    s.add_argument("which", choices=["A", "B"])
    s.add_argument("graph", help="edge-list file or family spec such as cycle:5")
    s.add_argument("--orient", help="orientation file of 'tail head' lines")
    s.set_defaults(func=_cmd_matrix)

    s = sub.add_parser("permanent", help="permanent of a matrix file, of B_G, or of a fixture")
    s.add_argument("target", nargs="?")
    s.add_argument("--fixture", choices=sorted(FIXTURES))
    s.add_argument("--naive", action="store_true", help="use permutation expansion")
    s.set_defaults(func=_cmd_permanent)

    s = sub.add_parser("matchings", help="count perfect matchings")
    s.add_argument("graph")
    s.add_argument("--line-graph", action="store_true", help="count in L(G)")
    s.add_argument("--dong", action="store_true", help="also evaluate the tree product formula")
    s.set_defaults(func=_cmd_matchings)

    s = sub.add_parser("split", help="edge-split recursion for M(L(G))")
    s.add_argument("graph")
    s.add_argument("--edge", required=True, help="u,v")
    s.set_defaults(func=_cmd_split)

    s = sub.add_parser("pind", help="permanent index of A_G or B_G")
    s.add_argument("which", choices=["A", "B"])
    s.add_argument("graph")
    s.add_argument("--max", type=int, default=2)
    s.add_argument("--method", choices=["exhaustive", "certify", "reduce"], default="exhaustive")
    s.add_argument("--orient")
    s.set_defaults(func=_cmd_pind)

    s = sub.add_parser("classify", help="cyclic structure and family membership")
    s.add_argument("graph")
    s.set_defaults(func=_cmd_classify)

    s = sub.add_parser("check", help="choosability certificates: 12, 22 or 13")
    s.add_argument("which", choices=["12", "22", "13"])
    s.add_argument("graph")
    s.add_argument("--orient")
    s.set_defaults(func=_cmd_check)

    s = sub.add_parser("weighting", help="find a proper total weighting from lists")
    s.add_argument("graph")
    s.add_argument("--lists", help="list-assignment file")
    s.add_argument("--random", help="k,kp: random lists of these sizes")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=_cmd_weighting)

    s = sub.add_parser("family", help="print a named family instance")
    s.add_argument("spec")
    s.set_defaults(func=_cmd_family)
    return p


def _render_text(value: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines += _render_text(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)) and not _flat_list(v):
                lines.append(f"{pad}-")
                lines += _render_text(v, indent + 1)
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(value))
    return lines


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, str) and "\n" in v:
        return "|\n" + v.rstrip("\n")
    return "none" if v is None else str(v)


_GLOBAL_SWITCHES = ("--json", "--timing", "-v", "--verbose")


def dumps_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    # global switches are accepted before or after the subcommand
    switches = [a for a in argv if a in _GLOBAL_SWITCHES]
    rest = [a for a in argv if a not in _GLOBAL_SWITCHES]
    try:
        args = parser.parse_args(switches + rest)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=err)
    start = time.perf_counter()
    try:
        summary, result, conclusive = args.func(args)
    except (GraphError, ParseError, ResourceLimitError, VerificationError, KeyError, OSError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        print(f"twc: error: {msg}", file=err)
        if isinstance(exc, ResourceLimitError) and exc.progress:
            print(f"twc: progress: {json.dumps(exc.progress, sort_keys=True)}", file=err)
        return EXIT_ERROR
    report: dict = {"command": argv, "input": summary, "result": result}
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    if args.json:
        print(dumps_report(report), file=out)
    else:
        print("\n".join(_render_text(report)), file=out)
    return EXIT_OK if conclusive else EXIT_INCONCLUSIVE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
