"""Permanent index search, orientation certificates for pind(A_G) = 1 and the
reduction engine for pind(B_G) <= 2."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from . import config
from .certificate import Certificate
from .errors import GraphError, ResourceLimitError, VerificationError
from .graph import Graph, OrientedGraph, classify, orient, orient_arcs, two_core
from .matrices import (
    IndexFunction,
    LabeledIntMatrix,
    assemble,
    build_A,
    build_B,
    edge_label,
    vertex_label,
)
from .permanent import permanent, permanent_with_multiplicities

log = logging.getLogger(__name__)

__all__ = [
    "PindResult",
    "pind_exhaustive",
    "nonsingular_selection",
    "ProofOrientation",
    "proof_orientation",
    "verify_lemma31",
    "certify_pindA",
    "reduce_for_pindB",
    "verify_certificate",
]


@dataclass
class PindResult:
    bound_checked: int
    achieved: int | None  # None: exceeds bound_checked
    multiplicities: dict[str, int] = field(default_factory=dict)
    permanent_value: int | None = None
    leaves: int = 0

    @property
    def exceeds(self) -> bool:
        return self.achieved is None

    def to_dict(self) -> dict:
        return {
            "bound_checked": self.bound_checked,
            "achieved": self.achieved if self.achieved is not None else f">{self.bound_checked}",
            "multiplicities": {k: v for k, v in self.multiplicities.items() if v},
            "permanent_value": self.permanent_value,
        }


def _search(
    columns: Sequence[Sequence[int]],
    caps: Sequence[int],
    rows: int,
    *,
    need_value: int | None = None,
    max_leaves: int,
    counter: list[int],
) -> tuple[list[int], int] | None:
    """First multiplicity vector (descending lexicographic) with
    0 <= mult <= caps, sum == rows and a nonzero permanent.

    ``need_value`` additionally requires some entry to equal it (used to skip
    vectors already tried at a smaller bound).
    """
    k = len(columns)
    full = (1 << rows) - 1
    support = []
    for c in columns:
        bits = 0
        for i, x in enumerate(c):
            if x:
                bits |= 1 << i
        support.append(bits)
    suffix_cap = [0] * (k + 1)
    suffix_sup = [0] * (k + 1)
    for j in range(k - 1, -1, -1):
        suffix_cap[j] = suffix_cap[j + 1] + caps[j]
        suffix_sup[j] = suffix_sup[j + 1] | (support[j] if caps[j] else 0)
    mult = [0] * k

    def dfs(j: int, remaining: int, covered: int, hit: bool):
        if remaining == 0:
            if covered != full or (need_value is not None and not hit):
                return None
            counter[0] += 1
            if counter[0] > max_leaves:
                raise ResourceLimitError(
                    f"pind search exceeded {max_leaves} candidate selections",
                    {"leaves": counter[0]},
                )
            value = permanent_with_multiplicities(columns, mult)
            return (list(mult), value) if value else None
        if j == k or remaining > suffix_cap[j] or (covered | suffix_sup[j]) != full:
            return None
        if need_value is not None and not hit and remaining < need_value:
            return None
        for c in range(min(caps[j], remaining), -1, -1):
            mult[j] = c
            found = dfs(
                j + 1,
                remaining - c,
                covered | (support[j] if c else 0),
                hit or (need_value is not None and c == need_value),
            )
            if found:
                return found
        mult[j] = 0
        return None

    return dfs(0, rows, 0 if rows else full, False)


def pind_exhaustive(
    M: LabeledIntMatrix,
    k_max: int,
    *,
    max_rows: int | None = None,
    max_leaves: int = config.PIND_LEAVES,
) -> PindResult:
    """Smallest k <= k_max such that some selection using each column at most
    k times is square with a nonzero permanent."""
    if k_max < 1:
        raise ValueError("k_max must be positive")
    rows = M.shape[0]
    cap = max_rows if max_rows is not None else config.pind_row_cap()
    if rows > cap:
        raise ResourceLimitError(f"pind search limited to {cap} rows, got {rows}", {"rows": rows})
    if rows == 0:
        return PindResult(k_max, 0, {}, 1)
    labels = [lab for lab, col in zip(M.col_labels, M.columns()) if any(col)]
    columns = [M.column(lab) for lab in labels]
    counter = [0]
    for k in range(1, k_max + 1):
        try:
            found = _search(
                columns,
                [k] * len(columns),
                rows,
                need_value=k if k > 1 else None,
                max_leaves=max_leaves,
                counter=counter,
            )
        except ResourceLimitError as exc:
            exc.progress.update({"k": k, "bound": k_max})
            raise
        if found:
            mult, value = found
            return PindResult(k_max, k, dict(zip(labels, mult)), value, counter[0])
    return PindResult(k_max, None, {}, None, counter[0])


def nonsingular_selection(
    a: LabeledIntMatrix, caps: Mapping[str, int], *, max_leaves: int = config.PIND_LEAVES
) -> tuple[dict[str, int], int] | None:
    """A valid index function below ``caps`` with nonzero permanent, if any."""
    rows = a.shape[0]
    if rows == 0:
        return {}, 1
    labels = [lab for lab in a.col_labels if caps.get(lab, 0) > 0 and any(a.column(lab))]
    found = _search(
        [a.column(lab) for lab in labels],
        [caps[lab] for lab in labels],
        rows,
        max_leaves=max_leaves,
        counter=[0],
    )
    if not found:
        return None
    mult, value = found
    return dict(zip(labels, mult)), value


# ---------------------------------------------------------------------------
# orientation certificates
# ---------------------------------------------------------------------------


@dataclass
class ProofOrientation:
    digraph: OrientedGraph
    sub_edges: tuple[int, ...]
    X: tuple[int, ...]
    claims: dict[int, tuple[int, int, int]]  # vertex -> (d_D'^-, d_D^-, d_D'^+) as stated
    stated: dict[str, object] = field(default_factory=dict)
    roles: dict[str, int] = field(default_factory=dict)


def _into(cycle: Sequence[int], hub: int) -> list[tuple[int, int]]:
    """Orient a cycle listed from ``hub`` so that hub is its only sink and the
    first vertex after hub is its only source."""
    rest = list(cycle[1:])
    arcs = [(rest[0], hub)]
    arcs += [(rest[i], rest[i + 1]) for i in range(len(rest) - 1)]
    arcs.append((rest[-1], hub))
    return arcs


def proof_orientation(base: Graph) -> ProofOrientation:
    """The acyclic orientation, sub-digraph D' and sink set X used to show
    pind(A) = 1 for a cycle or a bicyclic base (no hanging trees)."""
    cls = classify(base)
    b = cls.base
    if set(cls.base_vertices) != set(base.vertices):
        raise GraphError("proof orientation needs a base graph without hanging trees")
    claims: dict[int, tuple[int, int, int]] = {}
    stated: dict[str, object] = {}
    roles: dict[str, int] = {}

    if cls.kind == "unicyclic":
        cyc = b["cycle"]
        v1, vl = cyc[0], cyc[-1]
        arcs = [(cyc[i], cyc[i + 1]) for i in range(len(cyc) - 1)] + [(v1, vl)]
        sub = [(v1, vl)]
        X = (vl,)
        for v in cyc:
            claims[v] = (0, 1, 0)
        claims[v1] = (0, 0, 1)
        claims[vl] = (1, 2, 0)
        stated = {"sinks": [vl]}
        roles = {"v1": v1, "vl": vl}
    elif cls.kind == "bicyclic-B1":
        u, cp, cq = b["u"], b["Cp"], b["Cq"]
        v1, v2 = cp[1], cq[1]
        arcs = _into(cp, u) + _into(cq, u)
        sub = [(v1, u), (v2, u)]
        X = (u,)
        for v in base.vertices:
            claims[v] = (0, 1, 0)
        claims[u] = (2, 4, 0)
        claims[v1] = claims[v2] = (0, 0, 1)
        stated = {"sinks": [u], "eta_prime": {u: 0}}
        roles = {"u": u, "v1": v1, "v2": v2}
    elif cls.kind == "bicyclic-B2":
        u, vp, cp, cq, path = b["u"], b["v'"], b["Cp"], b["Cq"], b["path"]
        v3, v4 = cp[1], cq[1]
        arcs = _into(cp, u) + _into(cq, vp)
        arcs += [(path[i + 1], path[i]) for i in range(len(path) - 1)]
        sub = [(v3, u), (v4, vp)]
        X = (u,)
        for v in base.vertices:
            claims[v] = (0, 1, 0)
        claims[u] = (1, 3, 0)
        claims[vp] = (1, 2, 0)
        claims[v3] = claims[v4] = (0, 0, 1)
        stated = {"sinks": [u], "eta_prime": {u: 0}}
        roles = {"u": u, "v'": vp, "v3": v3, "v4": v4}
    elif cls.kind == "bicyclic-B3":
        u, vp = b["u"], b["v'"]
        paths = list(b["paths"])
        # the third path carries the u -> v' arcs; it must be the short one
        # when a hub-to-hub edge exists
        r_idx = min(range(3), key=lambda i: (len(paths[i]), -i))
        pr = paths.pop(r_idx)
        pp, pq = paths
        v5, v6 = pp[0], pp[-1]
        v8, v7 = pq[0], pq[-1]
        arcs = [(v6, vp)] + [(pp[i], pp[i - 1]) for i in range(len(pp) - 1, 0, -1)] + [(v5, u)]
        arcs += [(v8, u)] + [(pq[i], pq[i + 1]) for i in range(len(pq) - 1)] + [(v7, vp)]
        chain = [u] + list(pr) + [vp]
        arcs += [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
        y = chain[1]
        sub = [(v8, u), (v6, vp), (u, y)]
        X = (vp,)
        for v in base.vertices:
            claims[v] = (0, 1, 0)
        claims[v5] = claims[v8] = (0, 0, 1)
        claims[vp] = (1, 3, 0)
        if y != vp:
            claims[y] = (1, 1, 0)
        claims[u] = (1, 2, 1)
        stated = {"sinks": [u]}
        roles = {"u": u, "v'": vp, "v5": v5, "v6": v6, "v7": v7, "v8": v8, "y": y}
    else:
        raise GraphError(f"no proof orientation for kind {cls.kind!r}")

    d = orient_arcs(base, arcs)
    sub_idx = tuple(sorted(base.edge_index(t, h) for t, h in sub))
    return ProofOrientation(d, sub_idx, X, claims, stated, roles)


def _same_edge_set(a: Graph, b: Graph) -> bool:
    return {frozenset(e) for e in a.edges} == {frozenset(e) for e in b.edges}


def verify_lemma31(
    g: Graph,
    X: Iterable[int],
    d: OrientedGraph,
    sub_edges: Iterable[int],
    eta: IndexFunction,
    *,
    eta_prime_check: PindResult | None = None,
    claims: Mapping[int, tuple[int, int, int]] | None = None,
    stated: Mapping[str, object] | None = None,
) -> Certificate:
    """Check the acyclic-orientation conditions that make ``eta``
    non-singular for ``g``; raise VerificationError naming the failure.

    ``d`` orients G - E[X]; ``sub_edges`` indexes the edges of ``d.graph``
    forming D'.  ``claims``/``stated`` are per-vertex degree values and other
    facts asserted by a hand proof; disagreements with the recomputed values
    are reported in the trace, never silently corrected.

    Non-singularity of eta' on G[X] is taken from ``eta_prime_check`` when
    given (its witness is re-checked against eta'), otherwise searched for.
    """
    X = tuple(sorted(set(X)))
    sub = tuple(sorted(set(sub_edges)))
    for i in range(g.m):
        if eta[edge_label(i)] != 1:
            raise VerificationError("eta(e) = 1 on edges", detail=f"eta({edge_label(i)}) = {eta[edge_label(i)]}")
    inner = {i for i, (a, b) in enumerate(g.edges) if a in X and b in X}
    if d.graph.n != g.n or not _same_edge_set(d.graph, g.without_edges(inner)):
        raise VerificationError("D orients G - E[X]", detail="edge sets differ")
    if any(not 0 <= i < d.graph.m for i in sub):
        raise VerificationError("D' is a sub-digraph of D", detail=f"bad edge indices {sub}")

    if not d.is_acyclic():
        raise VerificationError("D is acyclic")
    sinks = d.sinks()
    for x in X:
        if x not in sinks:
            raise VerificationError("every vertex of X is a sink of D", vertex=x)

    margins, degrees = {}, {}
    for v in g.vertices:
        din_sub = d.in_degree(v, sub)
        din = d.in_degree(v)
        dout_sub = d.out_degree(v, sub)
        margin = eta[vertex_label(v)] + 2 * din_sub - din
        margins[v] = margin
        degrees[v] = (din_sub, din, dout_sub)
        if margin < dout_sub:
            raise VerificationError(
                "eta(v) + 2 d_D'^-(v) - d_D^-(v) >= d_D'^+(v)",
                vertex=v,
                detail=f"{eta[vertex_label(v)]} + 2*{din_sub} - {din} = {margin} < {dout_sub}",
            )

    eta_prime = {x: margins[x] for x in X}
    gx, relabel = g.induced_subgraph(X) if X else (None, {})
    inner_witness: dict = {"multiplicities": {}, "permanent_value": 1}
    if gx is not None and gx.m:
        ax = build_A(orient(gx))
        caps = {vertex_label(relabel[x]): eta_prime[x] for x in X}
        caps.update({edge_label(i): 1 for i in range(gx.m)})
        if eta_prime_check is not None and eta_prime_check.achieved is not None:
            mult = dict(eta_prime_check.multiplicities)
            if any(mult.get(lab, 0) > caps.get(lab, 0) for lab in mult):
                raise VerificationError("eta' is non-singular for G[X]", detail="supplied witness exceeds eta'")
            value = permanent(assemble(ax, mult))
            found = (mult, value) if value else None
        else:
            found = nonsingular_selection(ax, caps)
        if found is None:
            raise VerificationError("eta' is non-singular for G[X]", detail=f"eta' = {eta_prime}")
        inner_witness = {"multiplicities": found[0], "permanent_value": found[1]}

    trace: list = []
    for v, claim in sorted((claims or {}).items()):
        if tuple(claim) != degrees[v]:
            trace.append(
                {
                    "note": "stated degrees disagree with recomputed",
                    "vertex": v,
                    "stated": list(claim),
                    "recomputed": list(degrees[v]),
                }
            )
    if stated:
        if "sinks" in stated and set(stated["sinks"]) - sinks:
            trace.append(
                {"note": "stated sink is not a sink", "stated": sorted(stated["sinks"]), "sinks": sorted(sinks)}
            )
        for v, val in dict(stated.get("eta_prime", {})).items():
            if v in margins and margins[v] != val:
                trace.append(
                    {"note": "stated eta' disagrees with recomputed", "vertex": v, "stated": val, "recomputed": margins[v]}
                )

    all_ones = all(x == 1 for x in eta.values.values())
    return Certificate(
        claim="pind(A_G)=1" if all_ones else "eta non-singular",
        method="lemma31",
        witness={
            "graph": g.to_dict(),
            "X": list(X),
            "arcs": [list(a) for a in d.arcs()],
            "sub_arcs": [list(d.arcs()[i]) for i in sub],
            "eta": {k: v for k, v in eta.values.items()},
            "margins": {str(v): margins[v] for v in g.vertices},
            "eta_prime": {str(x): eta_prime[x] for x in X},
            "inner": inner_witness,
        },
        trace=trace,
    )


def _strip_leaves(g: Graph, keep_edge: bool) -> tuple[list[int], list[dict]]:
    """Delete degree-1 vertices (smallest first) until none remain, or, for
    trees, until a single edge is left.  Returns surviving vertices and the
    deletion trace."""
    adj = {v: set(g.adjacency[v]) for v in g.vertices}
    trace = []
    while True:
        edges = sum(len(a) for a in adj.values()) // 2
        if keep_edge and edges <= 1:
            break
        leaves = sorted(v for v, a in adj.items() if len(a) == 1)
        if not leaves:
            break
        v = leaves[0]
        (u,) = adj.pop(v)
        adj[u].discard(v)
        trace.append({"rule": "pendant", "vertex": v, "neighbor": u})
    alive = sorted(v for v, a in adj.items() if a or len(adj) == 1)
    return alive, trace


def certify_pindA(g: Graph) -> Certificate:
    """Certificate that pind(A_G) = 1 for a connected graph with m <= n + 1."""
    if not g.is_connected():
        raise GraphError("certify_pindA needs a connected graph")
    if g.m > g.n + 1:
        raise GraphError(f"certify_pindA supports m <= n+1 only (m={g.m}, n={g.n})")
    is_tree = g.m == g.n - 1
    alive, trace = _strip_leaves(g, keep_edge=is_tree)
    core, relabel = g.induced_subgraph(alive)
    back = {new: old for old, new in relabel.items()}
    witness = {"graph": g.to_dict(), "core_vertices": [back[v] for v in core.vertices]}

    if is_tree:
        res = pind_exhaustive(build_A(orient(core)), 1)
        if res.achieved is None or res.achieved > 1:
            raise RuntimeError("internal error: tree core without a unit selection")
        witness.update(core=core.to_dict(), multiplicities=res.multiplicities)
        return Certificate("pind(A_G)=1", "exhaustive", witness, trace, res.permanent_value)

    po = proof_orientation(core)
    try:
        inner = verify_lemma31(
            core,
            po.X,
            po.digraph,
            po.sub_edges,
            IndexFunction.constant(core),
            claims=po.claims,
            stated=po.stated,
        )
    except VerificationError as exc:
        raise RuntimeError(f"internal error: proof orientation rejected ({exc})") from exc
    witness.update(core=core.to_dict(), lemma31=inner.witness, roles=po.roles)
    return Certificate("pind(A_G)=1", "lemma31", witness, trace + inner.trace)


# ---------------------------------------------------------------------------
# pind(B_G) <= 2 by reductions
# ---------------------------------------------------------------------------


def _hanging_edge(adj: dict[int, set[int]]):
    for v in sorted(adj):
        if len(adj[v]) == 1:
            (u,) = adj[v]
            if len(adj[u]) in (2, 3):
                return (u, v)
    return None


def _pendant_pair(adj: dict[int, set[int]]):
    for v in sorted(adj):
        if len(adj[v]) == 1:
            (u,) = adj[v]
            if len(adj[u]) == 2:
                return (u, v)
    return None


def _twins(adj: dict[int, set[int]]):
    verts = sorted(adj)
    for i, u in enumerate(verts):
        if not adj[u]:
            continue
        for v in verts[i + 1:]:
            if v not in adj[u] and adj[u] == adj[v]:
                return (u, v)
    return None


def _thread4(adj: dict[int, set[int]]):
    for v3 in sorted(adj):
        if len(adj[v3]) != 2:
            continue
        v2, v4 = sorted(adj[v3])
        if len(adj[v2]) != 2 or len(adj[v4]) != 2:
            continue
        (v1,) = adj[v2] - {v3}
        (v5,) = adj[v4] - {v3}
        if v1 in (v3, v4) or v5 in (v2, v3):
            continue
        return (v2, v3, v4)
    return None


_RULES = (
    ("hanging_edge", _hanging_edge),
    ("pendant_pair", _pendant_pair),
    ("twin_pair", _twins),
    ("thread4", _thread4),
)


def _delete(adj: dict[int, set[int]], verts: Iterable[int]) -> dict[int, set[int]]:
    gone = set(verts)
    out = {v: a - gone for v, a in adj.items() if v not in gone}
    return {v: a for v, a in out.items() if a}


def _graph_of(adj: dict[int, set[int]]) -> tuple[Graph | None, list[int], list[tuple[int, int]]]:
    verts = sorted(adj)
    edges = sorted({(min(u, v), max(u, v)) for u in adj for v in adj[u]})
    if not verts:
        return None, [], []
    relabel = {v: i + 1 for i, v in enumerate(verts)}
    g = Graph(len(verts), tuple((relabel[u], relabel[v]) for u, v in edges))
    return g, verts, edges


def reduce_for_pindB(g: Graph, *, max_rows: int | None = None) -> Certificate:
    """Try to certify pind(B_G) <= 2.

    Reductions are applied greedily (hanging edge, pendant pair, twin pair,
    thread of length 4); each removes structure whose presence cannot raise
    pind(B) above 2.  The last graph is checked exhaustively; if that fails,
    earlier graphs of the chain are tried in turn.  Isolated vertices are
    dropped as they have no column in B.
    """
    if not g.is_connected():
        raise GraphError("reduce_for_pindB needs a connected graph")
    if g.m < 2:
        raise GraphError("reduce_for_pindB needs at least two edges")
    cap = max_rows if max_rows is not None else config.pind_row_cap()
    adj = {v: set(g.adjacency[v]) for v in g.vertices}
    chain = [adj]
    steps = []
    while True:
        for name, rule in _RULES:
            hit = rule(adj)
            if hit:
                adj = _delete(adj, hit)
                chain.append(adj)
                steps.append({"rule": name, "deleted": list(hit)})
                break
        else:
            break

    attempts = []
    for level in range(len(chain) - 1, -1, -1):
        base, verts, edges = _graph_of(chain[level])
        if base is None:
            return Certificate(
                "pind(B_G)<=2",
                "reduction",
                {"graph": g.to_dict(), "base_edges": [], "multiplicities": {}},
                steps[:level],
                1,
            )
        if base.m > cap:
            attempts.append({"level": level, "edges": base.m, "result": "skipped: too large"})
            continue
        res = pind_exhaustive(build_B(orient(base)), 2, max_rows=cap)
        if res.achieved is not None:
            return Certificate(
                "pind(B_G)<=2",
                "reduction" if level else "exhaustive",
                {
                    "graph": g.to_dict(),
                    "base_edges": [list(e) for e in edges],
                    "multiplicities": res.multiplicities,
                    "achieved": res.achieved,
                },
                steps[:level],
                res.permanent_value,
            )
        attempts.append({"level": level, "edges": base.m, "result": "exceeds 2"})
    return Certificate(
        "pind(B_G)<=2",
        "reduction",
        {"graph": g.to_dict(), "attempts": attempts},
        steps,
        None,
        status="inconclusive",
    )


# ---------------------------------------------------------------------------
# independent re-verification
# ---------------------------------------------------------------------------


def _graph_from_dict(data: Mapping) -> Graph:
    return Graph(int(data["n"]), tuple(tuple(e) for e in data["edges"]))


def verify_certificate(cert: Certificate) -> bool:
    """Re-check a certificate from its witness data alone; raises
    VerificationError when something does not hold."""
    if not cert.certified:
        raise VerificationError("certificate is conclusive", detail=cert.status)
    w = cert.witness
    if cert.claim == "pind(A_G)=1":
        g = _graph_from_dict(w["graph"])
        adj = {v: set(g.adjacency[v]) for v in g.vertices}
        for step in cert.trace:
            if step.get("rule") != "pendant":
                continue
            v, u = step["vertex"], step["neighbor"]
            if adj.get(v) != {u}:
                raise VerificationError("stripped vertex is a leaf", vertex=v)
            del adj[v]
            adj[u].discard(v)
        if sorted(w["core_vertices"]) != sorted(v for v in adj if adj[v] or len(adj) == 1):
            raise VerificationError("core matches the stripping trace")
        core = _graph_from_dict(w["core"])
        expect, _ = g.induced_subgraph(w["core_vertices"])
        if expect != core:
            raise VerificationError("core is the induced subgraph on the core vertices")
        if cert.method == "exhaustive":
            a = build_A(orient(core))
            value = permanent(assemble(a, w["multiplicities"]))
            if any(x > 1 for x in w["multiplicities"].values()) or value == 0 or value != cert.permanent_value:
                raise VerificationError("unit selection has nonzero permanent", detail=str(value))
            return True
        lw = w["lemma31"]
        d = orient_arcs(core, [tuple(a) for a in lw["arcs"]])
        sub = [core.edge_index(*a) for a in lw["sub_arcs"]]
        verify_lemma31(core, lw["X"], d, sub, IndexFunction(core, lw["eta"]))
        return True

    if cert.claim == "pind(B_G)<=2":
        g = _graph_from_dict(w["graph"])
        adj = {v: set(g.adjacency[v]) for v in g.vertices}
        checks = dict(_RULES)
        for step in cert.trace:
            hit = tuple(step["deleted"])
            if not _rule_applies(step["rule"], adj, hit, checks):
                raise VerificationError(f"reduction {step['rule']} applies", detail=str(hit))
            adj = _delete(adj, hit)
        base, _, edges = _graph_of(adj)
        if [list(e) for e in edges] != w["base_edges"]:
            raise VerificationError("base graph matches the reduction trace")
        if base is None:
            return True
        value = permanent(assemble(build_B(orient(base)), w["multiplicities"]))
        if value == 0 or value != cert.permanent_value or max(w["multiplicities"].values()) > 2:
            raise VerificationError("base selection has nonzero permanent", detail=str(value))
        return True

    if cert.claim == "(1,2)-choosable":
        from .choosability import verify_12_certificate

        return verify_12_certificate(cert)
    raise VerificationError("known certificate claim", detail=cert.claim)


def _rule_applies(name: str, adj: dict[int, set[int]], hit: tuple[int, ...], checks) -> bool:
    if any(v not in adj for v in hit):
        return False
    if name in ("hanging_edge", "pendant_pair"):
        u, v = hit
        ok_deg = (2, 3) if name == "hanging_edge" else (2,)
        return adj[v] == {u} and len(adj[u]) in ok_deg
    if name == "twin_pair":
        u, v = hit
        return u != v and v not in adj[u] and bool(adj[u]) and adj[u] == adj[v]
    if name == "thread4":
        v2, v3, v4 = hit
        if not all(len(adj[x]) == 2 for x in hit):
            return False
        if adj[v3] != {v2, v4}:
            return False
        (v1,) = adj[v2] - {v3}
        (v5,) = adj[v4] - {v3}
        return v1 not in hit and v5 not in hit
    return False
