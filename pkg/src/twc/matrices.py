"""The edge-row matrices A_G and B_G, index-function column assembly, and the
K3 block extension.

Column labels are ``v<i>`` for vertices and ``e<i>`` (1-based) for edges.
A_G lists every vertex column (ascending) before every edge column (edge
list order).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import GraphError, ParseError
from .graph import Graph, OrientedGraph

__all__ = [
    "LabeledIntMatrix",
    "IndexFunction",
    "build_A",
    "build_B",
    "assemble",
    "clique_block_extend",
    "vertex_label",
    "edge_label",
]


def vertex_label(v: int) -> str:
    return f"v{v}"


def edge_label(i: int) -> str:
    return f"e{i + 1}"


@dataclass(frozen=True)
class LabeledIntMatrix:
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "col_labels", tuple(self.col_labels))
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in self.rows))
        if len(self.rows) != len(self.row_labels):
            raise ValueError(f"{len(self.rows)} rows but {len(self.row_labels)} row labels")
        for i, r in enumerate(self.rows):
            if len(r) != len(self.col_labels):
                raise ValueError(
                    f"row {self.row_labels[i]} has {len(r)} entries for {len(self.col_labels)} columns"
                )
        if len(set(self.col_labels)) != len(self.col_labels):
            raise ValueError("column labels must be unique")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.col_labels)

    @property
    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def column(self, label: str) -> tuple[int, ...]:
        j = self.col_labels.index(label)
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(r[j] for r in self.rows) for j in range(len(self.col_labels))]

    def select_columns(self, labels: Sequence[str]) -> "LabeledIntMatrix":
        """Columns in the given order; a label may repeat (suffixed ``#k``)."""
        idx = [self.col_labels.index(lab) for lab in labels]
        count: dict[str, int] = {}
        new_labels = []
        for lab in labels:
            count[lab] = count.get(lab, 0) + 1
            new_labels.append(lab if count[lab] == 1 else f"{lab}#{count[lab]}")
        rows = tuple(tuple(r[j] for j in idx) for r in self.rows)
        return LabeledIntMatrix(self.row_labels, tuple(new_labels), rows)

    def negate_row(self, i: int) -> "LabeledIntMatrix":
        rows = list(self.rows)
        rows[i] = tuple(-x for x in rows[i])
        return LabeledIntMatrix(self.row_labels, self.col_labels, tuple(rows))

    def to_text(self) -> str:
        lines = [
            "# rows: " + " ".join(self.row_labels),
            "# cols: " + " ".join(self.col_labels),
        ]
        lines += [" ".join(str(x) for x in r) for r in self.rows]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, source: str = "<matrix>") -> "LabeledIntMatrix":
        row_labels = col_labels = None
        rows = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("rows:"):
                    row_labels = body[5:].split()
                elif body.startswith("cols:"):
                    col_labels = body[5:].split()
                continue
            try:
                rows.append([int(x) for x in line.split()])
            except ValueError:
                raise ParseError(source, lineno, "whitespace-separated integers", line) from None
            if len(rows[-1]) != len(rows[0]):
                raise ParseError(source, lineno, f"{len(rows[0])} entries", str(len(rows[-1])))
        if not rows:
            raise ParseError(source, 1, "at least one matrix row")
        width = len(rows[0])
        row_labels = row_labels or [f"r{i + 1}" for i in range(len(rows))]
        col_labels = col_labels or [f"c{j + 1}" for j in range(width)]
        return cls(tuple(row_labels), tuple(col_labels), tuple(tuple(r) for r in rows))

    def to_dict(self) -> dict:
        return {
            "row_labels": list(self.row_labels),
            "col_labels": list(self.col_labels),
            "rows": [list(r) for r in self.rows],
        }


class IndexFunction:
    """Non-negative multiplicity for every vertex and edge of a graph."""

    def __init__(self, graph: Graph, values: Mapping[str, int]):
        domain = [vertex_label(v) for v in graph.vertices] + [edge_label(i) for i in range(graph.m)]
        extra = set(values) - set(domain)
        if extra:
            raise GraphError(f"index function has labels outside V(G) ∪ E(G): {sorted(extra)}")
        self.graph = graph
        self.values = {lab: int(values.get(lab, 0)) for lab in domain}
        neg = [lab for lab, x in self.values.items() if x < 0]
        if neg:
            raise GraphError(f"index function must be non-negative; negative at {neg}")

    @classmethod
    def constant(cls, graph: Graph, vertex: int = 1, edge: int = 1) -> "IndexFunction":
        vals = {vertex_label(v): vertex for v in graph.vertices}
        vals.update({edge_label(i): edge for i in range(graph.m)})
        return cls(graph, vals)

    def __getitem__(self, label: str) -> int:
        return self.values[label]

    def total(self) -> int:
        return sum(self.values.values())

    def valid(self) -> bool:
        return self.total() == self.graph.m

    def __le__(self, other: "IndexFunction") -> bool:
        return all(self.values[k] <= other.values.get(k, 0) for k in self.values)

    def __repr__(self):
        nz = {k: v for k, v in self.values.items() if v}
        return f"IndexFunction({nz})"


def build_A(d: OrientedGraph) -> LabeledIntMatrix:
    """A_G: row e = (u -> v) has +1 at v and at edges != e through v, -1 at u
    and at edges != e through u."""
    g = d.graph
    cols = [vertex_label(v) for v in g.vertices] + [edge_label(i) for i in range(g.m)]
    rows = []
    for i in range(g.m):
        u, v = d.tail(i), d.head(i)
        row = [0] * (g.n + g.m)
        row[v - 1] = 1
        row[u - 1] = -1
        for j in g.incidence[v]:
            if j != i:
                row[g.n + j] = 1
        for j in g.incidence[u]:
            if j != i:
                row[g.n + j] = -1
        rows.append(tuple(row))
    return LabeledIntMatrix(tuple(edge_label(i) for i in range(g.m)), tuple(cols), tuple(rows))


def build_B(d: OrientedGraph) -> LabeledIntMatrix:
    if d.graph.m < 1:
        raise GraphError("B_G needs at least one edge")
    a = build_A(d)
    n = d.graph.n
    return LabeledIntMatrix(a.row_labels, a.col_labels[n:], tuple(r[n:] for r in a.rows))


def assemble(a: LabeledIntMatrix, eta: IndexFunction | Mapping[str, int]) -> LabeledIntMatrix:
    """A_(eta): column z repeated eta(z) times, in the column order of ``a``."""
    values = eta.values if isinstance(eta, IndexFunction) else dict(eta)
    unknown = set(values) - set(a.col_labels)
    if unknown:
        raise GraphError(f"index function names unknown columns {sorted(unknown)}")
    if sum(values.values()) != a.shape[0]:
        raise GraphError(
            f"index function not valid: total {sum(values.values())}, need {a.shape[0]}"
        )
    labels = [lab for lab in a.col_labels for _ in range(values.get(lab, 0))]
    return a.select_columns(labels)


# rows of the appended K3 block, listed so that the lower-right block is
# [[1,-1,-2],[0,-1,-1],[-1,0,1]]
_K3_ROW_ORDER = ("e32", "e31", "e21")


def clique_block_extend(
    bp: LabeledIntMatrix, g: Graph, attach_vertex: int
) -> tuple[LabeledIntMatrix, Graph, OrientedGraph]:
    """Extend a square column selection ``bp`` of A_G to G' = G with a K3 glued
    at ``attach_vertex``.

    The triangle is v1 = attach_vertex, v2 = n+1, v3 = n+2 with edges
    e21, e32, e31 appended to the edge list in that order and e_ij oriented
    v_i -> v_j.  The new columns are A_{v2}, A_{v3} and A_{e31} - A_{e21};
    they vanish on the old rows, so per(B'') = per(B') per(C).

    Returns (B'', G', orientation of the triangle edges within G').
    """
    m = g.m
    if bp.shape != (m, m):
        raise GraphError(f"B' must be {m}x{m} for this graph, got {bp.shape}")
    if not 1 <= attach_vertex <= g.n:
        raise GraphError(f"attach vertex {attach_vertex} not in graph")
    v1, v2, v3 = attach_vertex, g.n + 1, g.n + 2
    new_edges = {"e21": (v2, v1), "e32": (v3, v2), "e31": (v3, v1)}
    gp = Graph(g.n + 2, g.edges + tuple(new_edges[k] for k in ("e21", "e32", "e31")))
    idx = {"e21": m, "e32": m + 1, "e31": m + 2}
    # old edges keep the orientation implicit in bp; only the new rows are
    # computed, and they do not depend on how old edges are oriented
    heads = [v for _, v in g.edges] + [new_edges[k][1] for k in ("e21", "e32", "e31")]
    dp = OrientedGraph(gp, tuple(heads))
    ap = build_A(dp)
    ap_col = {lab: j for j, lab in enumerate(ap.col_labels)}

    base_labels = [lab.split("#")[0] for lab in bp.col_labels]
    missing = [lab for lab in base_labels if lab not in ap_col]
    if missing:
        raise GraphError(f"B' columns not in A_G: {missing}")

    def a_col(label: str, row: int) -> int:
        return ap.rows[row][ap_col[label]]

    def new_cols(row: int) -> tuple[int, int, int]:
        return (
            a_col(vertex_label(v2), row),
            a_col(vertex_label(v3), row),
            a_col(edge_label(idx["e31"]), row) - a_col(edge_label(idx["e21"]), row),
        )

    rows = []
    for r in range(m):
        extra = new_cols(r)
        if any(extra):
            raise GraphError("new columns must vanish on old rows")
        rows.append(tuple(bp.rows[r]) + extra)
    for name in _K3_ROW_ORDER:
        r = idx[name]
        rows.append(tuple(a_col(lab, r) for lab in base_labels) + new_cols(r))

    row_labels = tuple(bp.row_labels) + tuple(edge_label(idx[k]) for k in _K3_ROW_ORDER)
    col_labels = tuple(bp.col_labels) + (
        vertex_label(v2),
        vertex_label(v3),
        f"{edge_label(idx['e31'])}-{edge_label(idx['e21'])}",
    )
    return LabeledIntMatrix(row_labels, col_labels, tuple(rows)), gp, dp
