"""Small graph-database builders shared by mining tests."""

from __future__ import annotations

import random
from itertools import permutations

from semclone.pdg.graph import DependenceGraph, Edge, EdgeKind, Vertex
from semclone.pdg.veg import GraphDatabase

C, D = EdgeKind.CONTROL, EdgeKind.DATA


def vx(vid: int, label: str, file_id: str) -> Vertex:
    return Vertex(id=vid, label=label, attrs={"file_id": file_id})


def chain_db(copies: int = 2, labels: str = "abc") -> GraphDatabase:
    """N copies of a labeled path a->b->c (control edges)."""
    vertices, edges = [], []
    nxt = 0
    for copy in range(copies):
        fid = f"chain{copy}.mini"
        base = nxt
        for offset, label in enumerate(labels):
            vertices.append(vx(base + offset, label, fid))
        for offset in range(len(labels) - 1):
            edges.append(Edge(base + offset, base + offset + 1, C))
        nxt += len(labels)
    return GraphDatabase(vertices, edges)


def two_singletons_db() -> GraphDatabase:
    """Two frequent single-edge shapes, both maximal: p = 1/2 each."""
    vertices, edges = [], []
    nxt = 0
    for copy in range(2):
        fid = f"s{copy}.mini"
        vertices += [vx(nxt, "a", fid), vx(nxt + 1, "b", fid)]
        edges.append(Edge(nxt, nxt + 1, C))
        nxt += 2
    for copy in range(2):
        fid = f"t{copy}.mini"
        vertices += [vx(nxt, "a", fid), vx(nxt + 1, "c", fid)]
        edges.append(Edge(nxt, nxt + 1, D))
        nxt += 2
    return GraphDatabase(vertices, edges)


def asymmetric_db() -> GraphDatabase:
    """Isolated d->e plus a->b->c chains: absorption 1/3 versus 2/3."""
    vertices, edges = [], []
    nxt = 0
    for copy in range(2):
        fid = f"iso{copy}.mini"
        vertices += [vx(nxt, "d", fid), vx(nxt + 1, "e", fid)]
        edges.append(Edge(nxt, nxt + 1, C))
        nxt += 2
    for copy in range(2):
        fid = f"path{copy}.mini"
        vertices += [vx(nxt, "a", fid), vx(nxt + 1, "b", fid), vx(nxt + 2, "c", fid)]
        edges += [Edge(nxt, nxt + 1, C), Edge(nxt + 1, nxt + 2, C)]
        nxt += 3
    return GraphDatabase(vertices, edges)


def random_db(rng: random.Random, max_vertices: int = 8, labels: str = "abc") -> GraphDatabase:
    n = rng.randint(1, max_vertices)
    vertices = [vx(i, rng.choice(labels), f"f{i % 3}.mini") for i in range(n)]
    edges = []
    for src in range(n):
        for targ in range(n):
            for kind in (C, D):
                if rng.random() < 0.12:
                    edges.append(Edge(src, targ, kind))
    return GraphDatabase(vertices, edges)


def random_connected_pattern(
    rng: random.Random, db: GraphDatabase, max_edges: int = 3
) -> DependenceGraph | None:
    """A small connected pattern assembled from the database's own edges
    (so it usually has at least one embedding); None if the db is edgeless."""
    if not db.edges:
        return None
    target_edges = rng.randint(1, max_edges)
    seed_edge = rng.choice(db.edges)
    chosen = {seed_edge}
    touched = {seed_edge.src, seed_edge.targ}
    for _ in range(target_edges - 1):
        frontier = [
            e
            for e in db.edges
            if e not in chosen and (e.src in touched or e.targ in touched)
        ]
        if not frontier:
            break
        edge = rng.choice(frontier)
        chosen.add(edge)
        touched |= {edge.src, edge.targ}
    remap = {dbv: i for i, dbv in enumerate(sorted(touched))}
    vertices = [Vertex(id=remap[dbv], label=db.label_of(dbv)) for dbv in sorted(touched)]
    edges = [Edge(remap[e.src], remap[e.targ], e.kind) for e in chosen]
    return DependenceGraph(vertices, edges)


def random_pattern(rng: random.Random, max_vertices: int = 4, labels: str = "abc"):
    """A small arbitrary pattern, not necessarily embeddable or connected."""
    n = rng.randint(1, max_vertices)
    vertices = [Vertex(id=i, label=rng.choice(labels)) for i in range(n)]
    edges = []
    for src in range(n):
        for targ in range(n):
            for kind in (C, D):
                if rng.random() < 0.2:
                    edges.append(Edge(src, targ, kind))
    return DependenceGraph(vertices, edges)


def brute_force_embedding_count(pattern: DependenceGraph, db: GraphDatabase) -> int:
    """Oracle: enumerate every injective map and check the conditions."""
    pattern_vids = [v.id for v in pattern.vertices]
    db_vids = [v.id for v in db.vertices]
    count = 0
    for image in permutations(db_vids, len(pattern_vids)):
        mapping = dict(zip(pattern_vids, image))
        if any(
            db.label_of(mapping[pv]) != pattern.label_of[pv] for pv in pattern_vids
        ):
            continue
        if all(
            db.graph.has_edge(mapping[e.src], mapping[e.targ], e.kind)
            for e in pattern.edges
        ):
            count += 1
    return count
