"""Labeled directed dependence graphs and exact isomorphism.

Vertices carry a label (a normalized operation shape such as
``assign:mul`` or ``predicate:leq``) plus free-form attributes; edges
carry a kind, either control dependence or data dependence.  Isomorphism
and pattern matching look only at labels and edge kinds; attributes such
as line numbers and file ids never influence matching.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping


class EdgeKind(Enum):
    CONTROL = "cdep"
    DATA = "ddep"


@dataclass(frozen=True)
class Vertex:
    id: int
    label: str
    attrs: Mapping[str, object] = field(default_factory=dict)


@dataclass(frozen=True)
class Edge:
    src: int
    targ: int
    kind: EdgeKind

    def sort_key(self) -> tuple[int, int, str]:
        return (self.src, self.targ, self.kind.value)


class DependenceGraph:
    """Immutable directed graph with unique vertex ids and an edge *set*
    (duplicate (src, targ, kind) triples collapse)."""

    def __init__(self, vertices: list[Vertex] | tuple[Vertex, ...], edges) -> None:
        vertices = sorted(vertices, key=lambda v: v.id)
        ids = [v.id for v in vertices]
        if len(ids) != len(set(ids)):
            raise ValueError("duplicate vertex id")
        id_set = set(ids)
        for v in vertices:
            if not v.label:
                raise ValueError(f"vertex {v.id} has an empty label")
        unique_edges = sorted(set(edges), key=Edge.sort_key)
        for e in unique_edges:
            if e.src not in id_set or e.targ not in id_set:
                raise ValueError(f"edge {e.src}->{e.targ} references a missing vertex")
        self.vertices: tuple[Vertex, ...] = tuple(vertices)
        self.edges: tuple[Edge, ...] = tuple(unique_edges)
        self.label_of: dict[int, str] = {v.id: v.label for v in vertices}
        out: dict[int, list[tuple[EdgeKind, int]]] = {v.id: [] for v in vertices}
        inc: dict[int, list[tuple[EdgeKind, int]]] = {v.id: [] for v in vertices}
        for e in unique_edges:
            out[e.src].append((e.kind, e.targ))
            inc[e.targ].append((e.kind, e.src))
        self.out_edges: dict[int, tuple[tuple[EdgeKind, int], ...]] = {
            vid: tuple(sorted(pairs, key=lambda p: (p[0].value, p[1])))
            for vid, pairs in out.items()
        }
        self.in_edges: dict[int, tuple[tuple[EdgeKind, int], ...]] = {
            vid: tuple(sorted(pairs, key=lambda p: (p[0].value, p[1])))
            for vid, pairs in inc.items()
        }
        self.edge_set: frozenset[tuple[int, int, EdgeKind]] = frozenset(
            (e.src, e.targ, e.kind) for e in unique_edges
        )

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, src: int, targ: int, kind: EdgeKind) -> bool:
        return (src, targ, kind) in self.edge_set

    def label_counts(self) -> Counter[str]:
        return Counter(v.label for v in self.vertices)

    def is_weakly_connected(self) -> bool:
        if not self.vertices:
            return True
        neighbors: dict[int, set[int]] = {v.id: set() for v in self.vertices}
        for e in self.edges:
            neighbors[e.src].add(e.targ)
            neighbors[e.targ].add(e.src)
        start = self.vertices[0].id
        seen = {start}
        stack = [start]
        while stack:
            for nxt in neighbors[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return len(seen) == self.vertex_count

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DependenceGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    __hash__ = None  # mutable attribute dicts; key by canonical code instead

    def __repr__(self) -> str:
        return f"DependenceGraph({self.vertex_count} vertices, {self.edge_count} edges)"


def isomorphic(g1: DependenceGraph, g2: DependenceGraph) -> bool:
    """True iff a label-preserving bijection exists that matches all edges
    (with kinds) in both directions.

    Exact backtracking with label and degree-signature pruning; intended
    for desk-scale graphs.
    """
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False
    if g1.label_counts() != g2.label_counts():
        return False

    def signature(g: DependenceGraph, vid: int) -> tuple:
        out_sig = tuple(sorted((k.value, g.label_of[t]) for k, t in g.out_edges[vid]))
        in_sig = tuple(sorted((k.value, g.label_of[s]) for k, s in g.in_edges[vid]))
        return (g.label_of[vid], out_sig, in_sig)

    if Counter(signature(g1, v.id) for v in g1.vertices) != Counter(
        signature(g2, v.id) for v in g2.vertices
    ):
        return False

    sig2: dict[tuple, list[int]] = {}
    for v in g2.vertices:
        sig2.setdefault(signature(g2, v.id), []).append(v.id)

    # Order g1 vertices to keep the search constrained: rarest signature
    # first, then prefer vertices adjacent to already-ordered ones.
    order: list[int] = []
    placed: set[int] = set()
    remaining = {v.id for v in g1.vertices}
    adj: dict[int, set[int]] = {v.id: set() for v in g1.vertices}
    for e in g1.edges:
        adj[e.src].add(e.targ)
        adj[e.targ].add(e.src)
    while remaining:
        frontier = {u for v in placed for u in adj[v] if u in remaining}
        pool = frontier or remaining
        nxt = min(pool, key=lambda v: (len(sig2[signature(g1, v)]), v))
        order.append(nxt)
        placed.add(nxt)
        remaining.remove(nxt)

    mapping: dict[int, int] = {}
    inverse: dict[int, int] = {}

    def consistent(v1: int, v2: int) -> bool:
        for kind, t in g1.out_edges[v1]:
            if t in mapping and not g2.has_edge(v2, mapping[t], kind):
                return False
        for kind, s in g1.in_edges[v1]:
            if s in mapping and not g2.has_edge(mapping[s], v2, kind):
                return False
        # Bijection on the edge set both ways: g2 edges among mapped
        # vertices must exist in g1 too.
        for kind, t in g2.out_edges[v2]:
            if t in inverse and not g1.has_edge(v1, inverse[t], kind):
                return False
        for kind, s in g2.in_edges[v2]:
            if s in inverse and not g1.has_edge(inverse[s], v1, kind):
                return False
        return True

    def backtrack(index: int) -> bool:
        if index == len(order):
            return True
        v1 = order[index]
        for v2 in sig2[signature(g1, v1)]:
            if v2 in inverse:
                continue
            # Map before checking so self-loops are validated too.
            mapping[v1] = v2
            inverse[v2] = v1
            if consistent(v1, v2) and backtrack(index + 1):
                return True
            del mapping[v1]
            del inverse[v2]
        return False

    return backtrack(0)
