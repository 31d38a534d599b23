"""Lift mined patterns to file-level clone sets and write pattern reports."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

from semclone.clonesets import CloneSet, Provenance
from semclone.mining.lattice import Pattern
from semclone.pdg.veg import GraphDatabase


def pattern_files(pattern: Pattern, db: GraphDatabase) -> frozenset[str]:
    return frozenset(
        db.file_of[dbv] for embedding in pattern.embeddings for dbv in embedding
    )


def patterns_to_clone_sets(
    patterns: Sequence[Pattern], db: GraphDatabase
) -> list[CloneSet]:
    """One clone set per pattern: the distinct files its embeddings touch.

    Single-file sets are dropped (those are intra-file repeats, not
    file-level clones) and identical member sets are deduplicated, keeping
    the pattern that comes first in canonical-code order.
    """
    ordered = sorted(patterns, key=lambda p: p.canonical_code)
    kept: list[tuple[Pattern, frozenset[str]]] = []
    seen: set[frozenset[str]] = set()
    for pattern in ordered:
        files = pattern_files(pattern, db)
        if len(files) < 2:
            continue
        if files in seen:
            continue
        seen.add(files)
        kept.append((pattern, files))
    return [
        CloneSet(
            set_id=f"p{index}",
            members=files,
            provenance=Provenance.from_pattern(pattern.pattern_id),
        )
        for index, (pattern, files) in enumerate(kept)
    ]


def pattern_dot(pattern: Pattern, db: GraphDatabase) -> str:
    """A digraph rendering of one pattern; node labels carry the operation
    shape, node attributes list the source files matched at that node."""
    lines = [f"digraph pattern_{pattern.pattern_id} {{"]
    for vertex in pattern.graph.vertices:
        files = sorted(
            {db.file_of[embedding[vertex.id]] for embedding in pattern.embeddings}
        )
        file_list = ",".join(files)
        lines.append(
            f'  n{vertex.id} [label="{vertex.label}", files="{file_list}"];'
        )
    for edge in pattern.graph.edges:
        lines.append(f'  n{edge.src} -> n{edge.targ} [label="{edge.kind.value}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_pattern_files(
    patterns: Sequence[Pattern],
    db: GraphDatabase,
    out_dir: str | Path,
    *,
    seed: int | None = None,
    config_hash: str | None = None,
) -> list[Path]:
    """Write one .dot digraph per pattern plus a JSON sidecar with support,
    selection probability, member files, and the run's seed/config hash."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for index, pattern in enumerate(patterns):
        stem = f"pattern_{index:03d}"
        dot_path = out_dir / f"{stem}.dot"
        dot_path.write_text(pattern_dot(pattern, db), encoding="utf-8")
        sidecar = {
            "pattern_id": pattern.pattern_id,
            "support": pattern.support,
            "vertices": pattern.graph.vertex_count,
            "edges": pattern.graph.edge_count,
            "is_maximal": pattern.is_maximal,
            "selection_probability": pattern.selection_probability,
            "files": sorted(pattern_files(pattern, db)),
        }
        if seed is not None:
            sidecar["seed"] = seed
        if config_hash is not None:
            sidecar["config_hash"] = config_hash
        json_path = out_dir / f"{stem}.json"
        json_path.write_text(
            json.dumps(sidecar, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
        written.extend([dot_path, json_path])
    return written
