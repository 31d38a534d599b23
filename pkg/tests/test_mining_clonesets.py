from __future__ import annotations

from pathlib import Path

from graphs import vx
from semclone.config import MiningConfig
from semclone.mining.clonesets import (
    pattern_dot,
    patterns_to_clone_sets,
    write_pattern_files,
)
from semclone.mining.walk import sample_maximal
from semclone.pdg.graph import Edge, EdgeKind
from semclone.pdg.veg import GraphDatabase

C, D = EdgeKind.CONTROL, EdgeKind.DATA


def intra_file_repeat_db() -> GraphDatabase:
    """One file holding five copies of m->n: frequent but single-file."""
    vertices, edges = [], []
    nxt = 0
    for _ in range(5):
        vertices += [vx(nxt, "m", "solo.mini"), vx(nxt + 1, "n", "solo.mini")]
        edges.append(Edge(nxt, nxt + 1, C))
        nxt += 2
    return GraphDatabase(vertices, edges)


def duplicate_membership_db() -> GraphDatabase:
    """Two distinct maximal shapes living in the same two files."""
    vertices, edges = [], []
    nxt = 0
    for fid in ("x.mini", "y.mini"):
        vertices += [vx(nxt, "a", fid), vx(nxt + 1, "b", fid)]
        edges.append(Edge(nxt, nxt + 1, C))
        nxt += 2
        vertices += [vx(nxt, "c", fid), vx(nxt + 1, "d", fid)]
        edges.append(Edge(nxt, nxt + 1, D))
        nxt += 2
    return GraphDatabase(vertices, edges)


def test_single_file_pattern_dropped() -> None:
    db = intra_file_repeat_db()
    config = MiningConfig(min_support=5, sample_size=10, min_vertices=1, max_edges=19)
    patterns = sample_maximal(db, config, seed=100)
    assert patterns  # the walk does find the repeated shape
    assert patterns_to_clone_sets(patterns, db) == []


def test_duplicate_member_sets_collapse() -> None:
    db = duplicate_membership_db()
    config = MiningConfig(min_support=2, sample_size=50, min_vertices=1, max_edges=19)
    patterns = sample_maximal(db, config, seed=100)
    assert len(patterns) == 2  # two distinct shapes sampled
    clone_sets = patterns_to_clone_sets(patterns, db)
    assert len(clone_sets) == 1
    assert clone_sets[0].members == frozenset({"x.mini", "y.mini"})
    assert clone_sets[0].provenance.kind == "pattern"


def test_three_file_span() -> None:
    vertices, edges = [], []
    nxt = 0
    for fid in ("a.mini", "b.mini", "c.mini"):
        vertices += [vx(nxt, "p", fid), vx(nxt + 1, "q", fid)]
        edges.append(Edge(nxt, nxt + 1, C))
        nxt += 2
    db = GraphDatabase(vertices, edges)
    config = MiningConfig(min_support=3, sample_size=5, min_vertices=1, max_edges=19)
    patterns = sample_maximal(db, config, seed=100)
    clone_sets = patterns_to_clone_sets(patterns, db)
    assert len(clone_sets) == 1
    assert clone_sets[0].members == frozenset({"a.mini", "b.mini", "c.mini"})


def test_dot_and_sidecar_outputs(tmp_path: Path) -> None:
    db = duplicate_membership_db()
    config = MiningConfig(min_support=2, sample_size=50, min_vertices=1, max_edges=19)
    patterns = sample_maximal(db, config, seed=100)
    dot = pattern_dot(patterns[0], db)
    assert dot.startswith("digraph pattern_")
    assert 'label="a"' in dot or 'label="c"' in dot
    written = write_pattern_files(patterns, db, tmp_path / "patterns")
    assert len(written) == 2 * len(patterns)
    sidecar = (tmp_path / "patterns" / "pattern_000.json").read_text()
    assert '"support": 2' in sidecar
