"""Text formats: edge lists, orientations and list assignments.

Edge list::

    # comment
    n m
    u v        (m lines)

Orientation: one ``tail head`` line per edge, in any order.
List assignment: ``V <vertex> w1 w2 ...`` and ``E <u> <v> w1 w2 ...`` with
integer, decimal or ``p/q`` weights.
"""

from __future__ import annotations

import os
from fractions import Fraction

from .choosability import TotalListAssignment
from .errors import GraphError, ParseError
from .graph import Graph, OrientedGraph, family, orient_arcs

__all__ = [
    "parse_edge_list",
    "format_edge_list",
    "read_graph_arg",
    "parse_orientation",
    "parse_list_assignment",
    "format_list_assignment",
]


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _ints(line: str, count: int, source: str, lineno: int, what: str) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(source, lineno, what, line)
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise ParseError(source, lineno, what, line) from None


def parse_edge_list(text: str, source: str = "<graph>") -> Graph:
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError(source, 1, "header line 'n m'", "end of input")
    lineno, header = lines[0]
    n, m = _ints(header, 2, source, lineno, "header line 'n m'")
    if n < 1 or m < 0:
        raise ParseError(source, lineno, "n >= 1 and m >= 0", header)
    body = lines[1:]
    if len(body) != m:
        at = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise ParseError(source, at, f"exactly {m} edge lines", f"{len(body)} edge lines")
    edges = []
    for ln, line in body:
        u, v = _ints(line, 2, source, ln, "edge line 'u v'")
        edges.append((u, v))
        try:
            Graph(n, tuple(edges))
        except GraphError as exc:
            raise ParseError(source, ln, "a valid edge", str(exc)) from None
    return Graph(n, tuple(edges))


def format_edge_list(g: Graph) -> str:
    return "\n".join([f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]) + "\n"


def read_graph_arg(arg: str) -> Graph:
    """A path to an edge-list file, or else an inline family spec."""
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            return parse_edge_list(fh.read(), arg)
    return family(arg)


def parse_orientation(text: str, g: Graph, source: str = "<orientation>") -> OrientedGraph:
    arcs = []
    for ln, line in _data_lines(text):
        t, h = _ints(line, 2, source, ln, "arc line 'tail head'")
        if not g.has_edge(t, h):
            raise ParseError(source, ln, "an edge of the graph", line)
        arcs.append((t, h))
    try:
        return orient_arcs(g, arcs)
    except GraphError as exc:
        raise ParseError(source, len(text.splitlines()) or 1, "one arc per edge", str(exc)) from None


def _weights(parts: list[str], source: str, ln: int, line: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x) for x in parts)
    except (ValueError, ZeroDivisionError):
        raise ParseError(source, ln, "rational weights (integer, decimal or p/q)", line) from None


def parse_list_assignment(text: str, g: Graph, source: str = "<lists>") -> TotalListAssignment:
    vl: dict[int, tuple[Fraction, ...]] = {}
    el: dict[int, tuple[Fraction, ...]] = {}
    last = 1
    for ln, line in _data_lines(text):
        last = ln
        parts = line.split()
        tag = parts[0].upper()
        try:
            if tag == "V":
                v = int(parts[1])
                if not 1 <= v <= g.n:
                    raise ParseError(source, ln, f"vertex in 1..{g.n}", line)
                if v in vl:
                    raise ParseError(source, ln, "each vertex listed once", line)
                vl[v] = _weights(parts[2:], source, ln, line)
            elif tag == "E":
                u, v = int(parts[1]), int(parts[2])
                if not g.has_edge(u, v):
                    raise ParseError(source, ln, "an edge of the graph", line)
                i = g.edge_index(u, v)
                if i in el:
                    raise ParseError(source, ln, "each edge listed once", line)
                el[i] = _weights(parts[3:], source, ln, line)
            else:
                raise ParseError(source, ln, "a line starting with V or E", line)
        except ParseError:
            raise
        except (IndexError, ValueError):
            raise ParseError(source, ln, "'V <id> w...' or 'E <u> <v> w...'", line) from None
    try:
        return TotalListAssignment(g, vl, el)
    except GraphError as exc:
        raise ParseError(source, last, "a complete list assignment", str(exc)) from None


def format_list_assignment(lists: TotalListAssignment) -> str:
    g = lists.graph
    lines = [f"V {v} " + " ".join(str(x) for x in lists.vertex_lists[v]) for v in g.vertices]
    lines += [
        f"E {u} {v} " + " ".join(str(x) for x in lists.edge_lists[i]) for i, (u, v) in enumerate(g.edges)
    ]
    return "\n".join(lines) + "\n"
