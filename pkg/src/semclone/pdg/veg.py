"""Graph database and the line-JSON interchange format (.veg).

One database merges the dependence graphs of many files into a single
vertex/edge store; every vertex is attributed to exactly one file so mined
patterns can be lifted to file-level clone sets.

On disk, each line is either::

    ["vertex", {"id": 0, "label": "entry", "file_id": "a.mini", ...}]
    ["edge", {"src": 0, "targ": 1, "label": "cdep",
              "src_label": "entry", "targ_label": "assign:const"}]

Vertex records may additionally carry ``package_name``, ``class_name``,
``method_name``, ``type``, ``start_line`` and ``end_line``.  A vertex with
no ``file_id`` is attributed from ``package_name``/``class_name`` when
present; otherwise loading fails.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Sequence

from semclone.errors import InputError
from semclone.pdg.graph import DependenceGraph, Edge, EdgeKind, Vertex

_VERTEX_ATTR_KEYS = (
    "package_name",
    "class_name",
    "method_name",
    "type",
    "start_line",
    "end_line",
)


class GraphDatabase:
    """Merged store of dependence graphs with total file attribution."""

    def __init__(self, vertices: Sequence[Vertex], edges: Iterable[Edge]) -> None:
        self.graph = DependenceGraph(list(vertices), list(edges))
        self.file_of: dict[int, str] = {}
        for vertex in self.graph.vertices:
            file_id = vertex.attrs.get("file_id")
            if not isinstance(file_id, str) or not file_id:
                raise InputError(f"vertex {vertex.id} has no file attribution")
            self.file_of[vertex.id] = file_id
        self.label_index: dict[str, tuple[int, ...]] = {}
        by_label: dict[str, list[int]] = {}
        for vertex in self.graph.vertices:
            by_label.setdefault(vertex.label, []).append(vertex.id)
        self.label_index = {label: tuple(vids) for label, vids in by_label.items()}

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return self.graph.vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.graph.edges

    @property
    def file_ids(self) -> frozenset[str]:
        return frozenset(self.file_of.values())

    def label_of(self, vid: int) -> str:
        return self.graph.label_of[vid]

    @classmethod
    def from_graphs(cls, graphs: Iterable[DependenceGraph]) -> GraphDatabase:
        """Merge per-file graphs, renumbering vertex ids sequentially."""
        vertices: list[Vertex] = []
        edges: list[Edge] = []
        offset = 0
        for graph in graphs:
            remap = {v.id: offset + i for i, v in enumerate(graph.vertices)}
            for v in graph.vertices:
                vertices.append(Vertex(id=remap[v.id], label=v.label, attrs=dict(v.attrs)))
            for e in graph.edges:
                edges.append(Edge(src=remap[e.src], targ=remap[e.targ], kind=e.kind))
            offset += len(graph.vertices)
        return cls(vertices, edges)

    def restricted_to(self, file_ids: frozenset[str] | set[str]) -> GraphDatabase:
        """Sub-database induced by the vertices of the given files."""
        keep = {vid for vid, fid in self.file_of.items() if fid in file_ids}
        vertices = [v for v in self.graph.vertices if v.id in keep]
        edges = [e for e in self.graph.edges if e.src in keep and e.targ in keep]
        return GraphDatabase(vertices, edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphDatabase):
            return NotImplemented
        return self.graph == other.graph

    def __repr__(self) -> str:
        return (
            f"GraphDatabase({self.graph.vertex_count} vertices, "
            f"{self.graph.edge_count} edges, {len(self.file_ids)} files)"
        )


def save_veg(db: GraphDatabase, path: str | Path) -> None:
    lines: list[str] = []
    for vertex in db.graph.vertices:
        record: dict = {"id": vertex.id, "label": vertex.label}
        record.update({k: v for k, v in sorted(vertex.attrs.items())})
        lines.append(json.dumps(["vertex", record], sort_keys=True))
    for edge in db.graph.edges:
        record = {
            "src": edge.src,
            "targ": edge.targ,
            "label": edge.kind.value,
            "src_label": db.label_of(edge.src),
            "targ_label": db.label_of(edge.targ),
        }
        lines.append(json.dumps(["edge", record], sort_keys=True))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_veg(path: str | Path) -> GraphDatabase:
    path = Path(path)
    if not path.is_file():
        raise InputError(f"graph database not found: {path}")
    vertices: list[Vertex] = []
    edges: list[tuple[int, dict, Edge]] = []
    labels: dict[int, str] = {}
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}:{lineno}: invalid JSON: {exc}") from None
        if (
            not isinstance(record, list)
            or len(record) != 2
            or record[0] not in ("vertex", "edge")
            or not isinstance(record[1], dict)
        ):
            raise InputError(
                f'{path}:{lineno}: expected ["vertex", {{...}}] or ["edge", {{...}}]'
            )
        kind, payload = record
        if kind == "vertex":
            vertex = _parse_vertex(payload, path, lineno)
            vertices.append(vertex)
            labels[vertex.id] = vertex.label
        else:
            edges.append((lineno, payload, _parse_edge(payload, path, lineno)))
    for lineno, payload, edge in edges:
        for endpoint in (edge.src, edge.targ):
            if endpoint not in labels:
                raise InputError(
                    f"{path}:{lineno}: edge references missing vertex id {endpoint}"
                )
        for key, endpoint in (("src_label", edge.src), ("targ_label", edge.targ)):
            claimed = payload.get(key)
            if claimed is not None and claimed != labels[endpoint]:
                raise InputError(
                    f"{path}:{lineno}: {key} {claimed!r} does not match vertex "
                    f"{endpoint} label {labels[endpoint]!r}"
                )
    try:
        return GraphDatabase(vertices, [e for _, _, e in edges])
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _parse_vertex(payload: dict, path: Path, lineno: int) -> Vertex:
    if "id" not in payload or "label" not in payload:
        raise InputError(f"{path}:{lineno}: vertex needs 'id' and 'label'")
    vid = payload["id"]
    label = payload["label"]
    if not isinstance(vid, int) or not isinstance(label, str) or not label:
        raise InputError(f"{path}:{lineno}: malformed vertex record")
    attrs: dict[str, object] = {}
    file_id = payload.get("file_id")
    if not file_id:
        class_name = payload.get("class_name")
        if class_name:
            package = payload.get("package_name")
            file_id = f"{package}.{class_name}" if package else str(class_name)
        else:
            raise InputError(
                f"{path}:{lineno}: vertex {vid} has no file_id and no class_name "
                "to derive one from"
            )
    attrs["file_id"] = file_id
    for key in _VERTEX_ATTR_KEYS:
        if key in payload:
            attrs[key] = payload[key]
    return Vertex(id=vid, label=label, attrs=attrs)


def _parse_edge(payload: dict, path: Path, lineno: int) -> Edge:
    for key in ("src", "targ", "label"):
        if key not in payload:
            raise InputError(f"{path}:{lineno}: edge needs 'src', 'targ' and 'label'")
    src, targ, label = payload["src"], payload["targ"], payload["label"]
    if not isinstance(src, int) or not isinstance(targ, int):
        raise InputError(f"{path}:{lineno}: edge endpoints must be integers")
    try:
        kind = EdgeKind(label)
    except ValueError:
        raise InputError(
            f"{path}:{lineno}: unknown edge label {label!r} (expected 'cdep' or 'ddep')"
        ) from None
    return Edge(src=src, targ=targ, kind=kind)
