"""Embedding search: all the ways a pattern occurs in the database.

An embedding is an injective map from pattern vertices to database
vertices that preserves vertex labels and carries every pattern edge
(including self-loops) onto a database edge of the same kind.  The
database may have extra edges between mapped vertices; only the pattern's
edges are required.
"""

from __future__ import annotations

from semclone.pdg.graph import DependenceGraph
from semclone.pdg.veg import GraphDatabase


def find_embeddings(
    pattern: DependenceGraph, db: GraphDatabase
) -> list[tuple[int, ...]]:
    """All embeddings of ``pattern`` in ``db``, in deterministic order.

    Each result tuple is aligned with the pattern's vertices in ascending
    vertex-id order.  The count of results is the pattern's support.
    """
    vids = [v.id for v in pattern.vertices]
    if not vids:
        return []
    for v in pattern.vertices:
        if v.label not in db.label_index:
            return []

    und_adj: dict[int, set[int]] = {v: set() for v in vids}
    for e in pattern.edges:
        und_adj[e.src].add(e.targ)
        und_adj[e.targ].add(e.src)

    # Static search order: rarest label first, then grow through the
    # pattern's connectivity so every later vertex is anchored.
    first = min(vids, key=lambda v: (len(db.label_index[pattern.label_of[v]]), v))
    order = [first]
    placed = {first}
    while len(placed) < len(vids):
        frontier = sorted(
            u for v in placed for u in und_adj[v] if u not in placed
        )
        if not frontier:  # disconnected pattern: fall back to any vertex
            frontier = sorted(u for u in vids if u not in placed)
        order.append(frontier[0])
        placed.add(frontier[0])

    graph = db.graph
    mapping: dict[int, int] = {}
    used: set[int] = set()
    results: list[tuple[int, ...]] = []

    def candidates(pv: int) -> list[int]:
        label = pattern.label_of[pv]
        anchors = [u for u in und_adj[pv] if u in mapping and u != pv]
        if not anchors:
            return [dv for dv in db.label_index[label]]
        pool: set[int] | None = None
        anchor = anchors[0]
        da = mapping[anchor]
        for kind, t in pattern.out_edges[anchor]:
            if t == pv:
                found = {
                    dt
                    for dk, dt in graph.out_edges[da]
                    if dk == kind and db.label_of(dt) == label
                }
                pool = found if pool is None else pool & found
        for kind, s in pattern.in_edges[anchor]:
            if s == pv:
                found = {
                    ds
                    for dk, ds in graph.in_edges[da]
                    if dk == kind and db.label_of(ds) == label
                }
                pool = found if pool is None else pool & found
        return sorted(pool or ())

    def edges_ok(pv: int) -> bool:
        dv = mapping[pv]
        for kind, t in pattern.out_edges[pv]:
            dt = mapping.get(t)
            if dt is not None and not graph.has_edge(dv, dt, kind):
                return False
        for kind, s in pattern.in_edges[pv]:
            ds = mapping.get(s)
            if ds is not None and not graph.has_edge(ds, dv, kind):
                return False
        return True

    def backtrack(index: int) -> None:
        if index == len(order):
            results.append(tuple(mapping[v] for v in vids))
            return
        pv = order[index]
        for dv in candidates(pv):
            if dv in used:
                continue
            mapping[pv] = dv
            if edges_ok(pv):
                used.add(dv)
                backtrack(index + 1)
                used.remove(dv)
            del mapping[pv]

    backtrack(0)
    results.sort()
    return results
