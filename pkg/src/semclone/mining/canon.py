"""Canonical codes for labeled directed graphs.

Two graphs get the same code exactly when they are isomorphic, which makes
the code usable as a dictionary key for deduplicating mined patterns and
for addressing lattice nodes.

The algorithm is individualization-refinement: vertices are first colored
by label, colors are refined by the multiset of (edge kind, neighbor
color) pairs over in- and out-neighborhoods until stable, and remaining
symmetric cells are broken by trying every member and keeping the
lexicographically smallest serialization.  Exact and exponential in the
worst case; patterns here are desk-scale (tens of vertices, diverse
labels), where refinement almost always discretizes immediately.
"""

from __future__ import annotations

from semclone.pdg.graph import DependenceGraph, Edge, Vertex


def canonical_form(graph: DependenceGraph) -> tuple[str, tuple[int, ...]]:
    """Return (canonical code, vertex ids in canonical order)."""
    vids = [v.id for v in graph.vertices]
    if not vids:
        return ("", ())

    initial_labels = sorted({v.label for v in graph.vertices})
    label_color = {label: i for i, label in enumerate(initial_labels)}
    colors = {v.id: label_color[v.label] for v in graph.vertices}
    colors = _refine(graph, vids, colors)

    best: list[tuple[str, tuple[int, ...]] | None] = [None]

    def search(colors: dict[int, int]) -> None:
        cells = _cells(vids, colors)
        target = next((cell for cell in cells if len(cell) > 1), None)
        if target is None:
            ordering = tuple(cell[0] for cell in cells)
            code = _encode(graph, ordering)
            if best[0] is None or code < best[0][0]:
                best[0] = (code, ordering)
            return
        for v in target:
            # Individualize v ahead of its cell, then re-refine.
            branched = {u: colors[u] * 2 for u in vids}
            branched[v] -= 1
            search(_refine(graph, vids, branched))

    search(colors)
    assert best[0] is not None
    return best[0]


def canonical_pattern_graph(graph: DependenceGraph) -> tuple[DependenceGraph, str]:
    """Relabel a graph into canonical vertex order (ids 0..n-1, attributes
    dropped); equal codes then mean structurally identical objects."""
    code, ordering = canonical_form(graph)
    position = {vid: i for i, vid in enumerate(ordering)}
    vertices = [
        Vertex(id=position[vid], label=graph.label_of[vid]) for vid in ordering
    ]
    edges = [
        Edge(src=position[e.src], targ=position[e.targ], kind=e.kind)
        for e in graph.edges
    ]
    return DependenceGraph(vertices, edges), code


def _refine(
    graph: DependenceGraph, vids: list[int], colors: dict[int, int]
) -> dict[int, int]:
    while True:
        signatures = {
            v: (
                colors[v],
                tuple(sorted((k.value, colors[t]) for k, t in graph.out_edges[v])),
                tuple(sorted((k.value, colors[s]) for k, s in graph.in_edges[v])),
            )
            for v in vids
        }
        index = {sig: i for i, sig in enumerate(sorted(set(signatures.values())))}
        refined = {v: index[signatures[v]] for v in vids}
        if _partition(vids, refined) == _partition(vids, colors):
            return refined
        colors = refined


def _partition(vids: list[int], colors: dict[int, int]) -> frozenset[frozenset[int]]:
    groups: dict[int, set[int]] = {}
    for v in vids:
        groups.setdefault(colors[v], set()).add(v)
    return frozenset(frozenset(members) for members in groups.values())


def _cells(vids: list[int], colors: dict[int, int]) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for v in sorted(vids):
        groups.setdefault(colors[v], []).append(v)
    return [groups[color] for color in sorted(groups)]


def _encode(graph: DependenceGraph, ordering: tuple[int, ...]) -> str:
    position = {vid: i for i, vid in enumerate(ordering)}
    labels = ",".join(graph.label_of[vid] for vid in ordering)
    edges = ";".join(
        sorted(
            f"{position[e.src]:03d}>{position[e.targ]:03d}:{e.kind.value}"
            for e in graph.edges
        )
    )
    return f"V[{labels}]E[{edges}]"
