from __future__ import annotations

import random
from pathlib import Path

from semclone.pdg.builder import build_pdg
from semclone.pdg.graph import DependenceGraph, Edge, EdgeKind, Vertex, isomorphic
from semclone.pdg.minilang import parse_program

C, D = EdgeKind.CONTROL, EdgeKind.DATA


def pdg_of(text: str, file_id: str = "t.mini") -> DependenceGraph:
    return build_pdg(parse_program(text), file_id)


def test_single_statement_graph() -> None:
    graph = pdg_of("x = 1;")
    assert [v.label for v in graph.vertices] == ["entry", "assign:const"]
    assert [(e.src, e.targ, e.kind) for e in graph.edges] == [(0, 1, C)]


def test_def_use_edge() -> None:
    graph = pdg_of("x = 1; y = x;")
    assert (1, 2, D) in graph.edge_set
    assert graph.label_of[2] == "assign:var"


def test_factorial_for_and_while_are_isomorphic(factorial_dir: Path) -> None:
    g_for = pdg_of((factorial_dir / "fact_for.mini").read_text(), "fact_for.mini")
    g_while = pdg_of((factorial_dir / "fact_while.mini").read_text(), "fact_while.mini")
    assert isomorphic(g_for, g_while)


def test_label_change_breaks_isomorphism() -> None:
    g1 = pdg_of("x = 1; y = x * 2;")
    g2 = pdg_of("x = 1; y = x + 2;")
    assert not isomorphic(g1, g2)


def test_isomorphic_to_itself() -> None:
    graph = pdg_of("a = 1; while (a < 9) { a = a + 1; } print(a);")
    assert isomorphic(graph, graph)


def test_labels_exclude_identifiers_and_values() -> None:
    g1 = pdg_of("total = 41; result = total * total;")
    g2 = pdg_of("n = 7; m = n * n;")
    assert isomorphic(g1, g2)


def test_straight_line_data_deps_match_direct_scan() -> None:
    # Oracle: in straight-line code, u -> v iff u is the last assignment to
    # a variable that v reads.
    rng = random.Random(11)
    names = ["a", "b", "c", "d"]
    for _ in range(30):
        lines = []
        for _ in range(rng.randint(2, 10)):
            target = rng.choice(names)
            if rng.random() < 0.5:
                source = rng.choice(names + ["1"])
                if source == "1" or source not in [line[0] for line in lines]:
                    lines.append((target, []))
                else:
                    lines.append((target, [source]))
            else:
                defined = sorted({line[0] for line in lines})
                reads = rng.sample(defined, k=min(len(defined), rng.randint(0, 2)))
                lines.append((target, reads))
        text = "".join(
            f"{t} = {' + '.join(reads) if reads else rng.randint(0, 9)};\n"
            for t, reads in lines
        )
        graph = pdg_of(text)

        expected = set()
        last_def: dict[str, int] = {}
        for index, (target, reads) in enumerate(lines):
            vid = index + 1  # entry vertex is 0
            for name in reads:
                expected.add((last_def[name], vid))
            last_def[target] = vid
        actual = {(e.src, e.targ) for e in graph.edges if e.kind is D}
        assert actual == expected, text


def test_every_non_entry_vertex_is_controlled() -> None:
    text = """
    x = 3;
    if (x > 1) {
      y = 1;
      while (y < x) { y = y + 1; }
    } else {
      y = 0;
    }
    print(y);
    """
    graph = pdg_of(text)
    for vertex in graph.vertices[1:]:
        kinds = [k for k, _ in graph.in_edges[vertex.id]]
        assert EdgeKind.CONTROL in kinds


def test_predicate_with_empty_branch_has_no_dangling_edges() -> None:
    graph = pdg_of("x = 1; if (x > 0) { } print(x);")
    # the predicate exists, governs nothing, and the graph is well-formed
    labels = [v.label for v in graph.vertices]
    assert "predicate:gt" in labels
    pred = next(v.id for v in graph.vertices if v.label == "predicate:gt")
    assert graph.out_edges[pred] == ()


def test_loop_carried_self_dependence() -> None:
    graph = pdg_of("i = 0; while (i < 3) { i = i + 1; }")
    increment = next(v.id for v in graph.vertices if v.label == "assign:add")
    assert (increment, increment, D) in graph.edge_set


def test_syntax_invariance_over_random_loop_bodies() -> None:
    # for-form and while-form of the same loop build isomorphic graphs
    rng = random.Random(3)
    shapes = ["{v} = {v} + {w};", "{v} = {v} * 2;", "print({v});"]
    for trial in range(10):
        body_lines = [
            rng.choice(shapes).format(v=rng.choice("ab"), w=rng.choice("ab"))
            for _ in range(rng.randint(1, 3))
        ]
        body = "\n    ".join(body_lines)
        for_text = f"a = 1;\nb = 2;\nfor (i = 0; i < 5; i = i + 1) {{\n    {body}\n}}\n"
        while_text = (
            f"a = 1;\nb = 2;\ni = 0;\nwhile (i < 5) {{\n    {body}\n    i = i + 1;\n}}\n"
        )
        assert isomorphic(pdg_of(for_text), pdg_of(while_text)), for_text


def test_file_attribution_on_every_vertex() -> None:
    graph = pdg_of("x = 1; print(x);", file_id="pkg/file.mini")
    for vertex in graph.vertices:
        assert vertex.attrs["file_id"] == "pkg/file.mini"


def test_graph_rejects_duplicate_ids_and_dangling_edges() -> None:
    import pytest

    with pytest.raises(ValueError):
        DependenceGraph([Vertex(0, "a"), Vertex(0, "b")], [])
    with pytest.raises(ValueError):
        DependenceGraph([Vertex(0, "a")], [Edge(0, 9, C)])
    with pytest.raises(ValueError):
        DependenceGraph([Vertex(0, "")], [])


def test_parallel_edges_of_different_kinds_both_kept() -> None:
    graph = DependenceGraph(
        [Vertex(0, "a"), Vertex(1, "b")], [Edge(0, 1, C), Edge(0, 1, D)]
    )
    assert graph.edge_count == 2
    assert graph.has_edge(0, 1, C) and graph.has_edge(0, 1, D)
    # exact duplicates do collapse
    deduped = DependenceGraph([Vertex(0, "a"), Vertex(1, "b")], [Edge(0, 1, C), Edge(0, 1, C)])
    assert deduped.edge_count == 1
