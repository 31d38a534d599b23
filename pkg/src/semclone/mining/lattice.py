"""The frequent-pattern lattice.

Nodes are frequent connected patterns keyed by canonical code; children
are frequent one-edge extensions (a new edge between existing vertices, or
a new edge to one new vertex).  The root is a virtual empty pattern whose
children are all frequent single-edge patterns, which makes the transition
formula total.

A node with no frequent children is maximal.  When an edge cap is in
force, patterns at the cap count as maximal within the capped universe
(larger extensions are simply outside the mined space).

A single random walk from the root moves to a uniformly random child each
step and is absorbed at a maximal pattern.  ``selection_probabilities``
computes each maximal pattern's absorption probability exactly with a
reach-probability dynamic program over the enumerated lattice, equivalent
to powering the walk's transition matrix without materializing it.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field

from semclone.errors import InternalInvariantError, ResourceBudgetError
from semclone.mining.canon import canonical_pattern_graph
from semclone.mining.embed import find_embeddings
from semclone.pdg.graph import DependenceGraph, Edge, EdgeKind, Vertex
from semclone.pdg.veg import GraphDatabase

ROOT_CODE = ""


@dataclass
class Pattern:
    graph: DependenceGraph  # canonical vertex order, ids 0..n-1
    canonical_code: str
    support: int
    embeddings: tuple[tuple[int, ...], ...]
    is_maximal: bool = False
    selection_probability: float | None = None

    @property
    def pattern_id(self) -> str:
        return hashlib.sha256(self.canonical_code.encode("utf-8")).hexdigest()[:12]


def make_root() -> Pattern:
    return Pattern(
        graph=DependenceGraph([], []),
        canonical_code=ROOT_CODE,
        support=0,
        embeddings=(),
    )


def _support(embeddings: list[tuple[int, ...]], db: GraphDatabase, mode: str) -> int:
    if mode == "files":
        return len({db.file_of[v] for emb in embeddings for v in emb})
    return len(embeddings)


def build_pattern(
    graph: DependenceGraph, db: GraphDatabase, support_mode: str = "embeddings"
) -> Pattern:
    canonical, code = canonical_pattern_graph(graph)
    embeddings = find_embeddings(canonical, db)
    return Pattern(
        graph=canonical,
        canonical_code=code,
        support=_support(embeddings, db, support_mode),
        embeddings=tuple(embeddings),
    )


def extensions(
    pattern: Pattern,
    db: GraphDatabase,
    min_support: int,
    support_mode: str = "embeddings",
) -> list[Pattern]:
    """All frequent connected one-edge extensions of a pattern,
    deduplicated by canonical code and sorted by it.

    For the virtual root this yields every frequent single-edge pattern.
    """
    if pattern.graph.vertex_count == 0:
        candidate_graphs = _single_edge_graphs(db)
    else:
        candidate_graphs = _one_edge_extension_graphs(pattern, db)
    by_code: dict[str, Pattern] = {}
    for graph in candidate_graphs:
        extended = build_pattern(graph, db, support_mode)
        if extended.support < min_support:
            continue
        by_code.setdefault(extended.canonical_code, extended)
    return [by_code[code] for code in sorted(by_code)]


def _single_edge_graphs(db: GraphDatabase) -> list[DependenceGraph]:
    seen: set[tuple[str, EdgeKind, str]] = set()
    graphs: list[DependenceGraph] = []
    for edge in db.edges:
        triple = (db.label_of(edge.src), edge.kind, db.label_of(edge.targ))
        if triple in seen:
            continue
        seen.add(triple)
        src_label, kind, targ_label = triple
        if edge.src == edge.targ:
            graphs.append(
                DependenceGraph(
                    [Vertex(id=0, label=src_label)],
                    [Edge(src=0, targ=0, kind=kind)],
                )
            )
        else:
            graphs.append(
                DependenceGraph(
                    [Vertex(id=0, label=src_label), Vertex(id=1, label=targ_label)],
                    [Edge(src=0, targ=1, kind=kind)],
                )
            )
    return graphs


def _one_edge_extension_graphs(
    pattern: Pattern, db: GraphDatabase
) -> list[DependenceGraph]:
    """Candidate extensions derived from the pattern's embeddings; every
    extension with at least one embedding is generated this way."""
    graph = pattern.graph
    vids = [v.id for v in graph.vertices]
    next_id = max(vids) + 1
    deltas: set[tuple] = set()
    for emb in pattern.embeddings:
        inverse = {dbv: vids[i] for i, dbv in enumerate(emb)}
        for i, dbv in enumerate(emb):
            pv = vids[i]
            for kind, dt in db.graph.out_edges[dbv]:
                if dt in inverse:
                    if not graph.has_edge(pv, inverse[dt], kind):
                        deltas.add(("edge", pv, inverse[dt], kind))
                else:
                    deltas.add(("out", pv, kind, db.label_of(dt)))
            for kind, ds in db.graph.in_edges[dbv]:
                if ds in inverse:
                    if not graph.has_edge(inverse[ds], pv, kind):
                        deltas.add(("edge", inverse[ds], pv, kind))
                else:
                    deltas.add(("in", pv, kind, db.label_of(ds)))
    graphs: list[DependenceGraph] = []
    base_vertices = list(graph.vertices)
    base_edges = list(graph.edges)
    for delta in sorted(deltas, key=repr):
        if delta[0] == "edge":
            _, src, targ, kind = delta
            graphs.append(
                DependenceGraph(base_vertices, base_edges + [Edge(src, targ, kind)])
            )
        elif delta[0] == "out":
            _, pv, kind, label = delta
            graphs.append(
                DependenceGraph(
                    base_vertices + [Vertex(id=next_id, label=label)],
                    base_edges + [Edge(pv, next_id, kind)],
                )
            )
        else:
            _, pv, kind, label = delta
            graphs.append(
                DependenceGraph(
                    base_vertices + [Vertex(id=next_id, label=label)],
                    base_edges + [Edge(next_id, pv, kind)],
                )
            )
    return graphs


@dataclass
class Lattice:
    nodes: dict[str, Pattern] = field(default_factory=dict)
    children: dict[str, tuple[str, ...]] = field(default_factory=dict)
    root_code: str = ROOT_CODE

    @property
    def maximal_codes(self) -> tuple[str, ...]:
        return tuple(
            code
            for code in sorted(self.nodes)
            if code != self.root_code and not self.children[code]
        )

    def out_degree(self, code: str) -> int:
        return len(self.children[code])


def enumerate_lattice(
    db: GraphDatabase,
    min_support: int,
    max_edges: int,
    node_budget: int = 20000,
    support_mode: str = "embeddings",
) -> Lattice:
    """Exhaustive breadth-first enumeration from the root.

    Raises ResourceBudgetError when the number of lattice nodes exceeds
    ``node_budget``.
    """
    root = make_root()
    lattice = Lattice(nodes={ROOT_CODE: root}, children={})
    queue: deque[Pattern] = deque([root])
    while queue:
        pattern = queue.popleft()
        if pattern.graph.edge_count >= max_edges:
            kids: list[Pattern] = []
        else:
            kids = extensions(pattern, db, min_support, support_mode)
        child_codes: list[str] = []
        for kid in kids:
            if kid.graph.edge_count != pattern.graph.edge_count + 1:
                raise InternalInvariantError("extension must add exactly one edge")
            child_codes.append(kid.canonical_code)
            if kid.canonical_code not in lattice.nodes:
                lattice.nodes[kid.canonical_code] = kid
                if len(lattice.nodes) - 1 > node_budget:
                    raise ResourceBudgetError(
                        f"lattice node budget exceeded (node_budget={node_budget})"
                    )
                queue.append(kid)
        lattice.children[pattern.canonical_code] = tuple(child_codes)
    for code, pattern in lattice.nodes.items():
        if code != ROOT_CODE:
            pattern.is_maximal = not lattice.children[code]
    return lattice


def transition_row(code: str, lattice: Lattice) -> list[tuple[str, float]]:
    """The walk's transition distribution out of a lattice node: uniform
    over children, or an absorbing self-loop at a maximal node."""
    if code not in lattice.nodes:
        raise KeyError(f"node {code!r} is not in the lattice")
    kids = lattice.children[code]
    if not kids:
        if code == lattice.root_code:
            raise InternalInvariantError(
                "the root has no children: no frequent pattern exists"
            )
        return [(code, 1.0)]
    share = 1.0 / len(kids)
    return [(kid, share) for kid in kids]


def selection_probabilities(lattice: Lattice) -> dict[str, float]:
    """Absorption probability of each maximal pattern for a single walk.

    Reach probabilities propagate from the root in topological order
    (children always have exactly one more edge than their parent, so edge
    count is a valid topological rank).
    """
    order = sorted(
        lattice.nodes, key=lambda code: (lattice.nodes[code].graph.edge_count, code)
    )
    reach = {code: 0.0 for code in lattice.nodes}
    reach[lattice.root_code] = 1.0
    for code in order:
        kids = lattice.children[code]
        if not kids:
            continue
        share = reach[code] / len(kids)
        for kid in kids:
            reach[kid] += share
    probabilities = {code: reach[code] for code in lattice.maximal_codes}
    if probabilities:
        total = sum(probabilities[code] for code in sorted(probabilities))
        if abs(total - 1.0) > 1e-9:
            raise InternalInvariantError(
                f"absorption probabilities sum to {total!r}, expected 1"
            )
    return probabilities
