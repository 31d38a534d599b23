"""Clone sets: groups of files claimed to be mutual clones.

A clone set always has at least two members and carries provenance saying
which channel produced it (a topic id, a mined pattern id, or both for
hybrid agreement).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from semclone.errors import InputError


@dataclass(frozen=True)
class Provenance:
    kind: str  # "topic" | "pattern" | "hybrid"
    topic: int | None = None
    pattern: str | None = None

    @classmethod
    def from_topic(cls, topic: int) -> Provenance:
        return cls(kind="topic", topic=topic)

    @classmethod
    def from_pattern(cls, pattern_id: str) -> Provenance:
        return cls(kind="pattern", pattern=pattern_id)

    @classmethod
    def hybrid(cls, topic: int | None = None, pattern_id: str | None = None) -> Provenance:
        return cls(kind="hybrid", topic=topic, pattern=pattern_id)


@dataclass(frozen=True)
class CloneSet:
    set_id: str
    members: frozenset[str]
    provenance: Provenance

    def __post_init__(self) -> None:
        if len(self.members) < 2:
            raise ValueError(f"clone set {self.set_id!r} needs >= 2 members")

    @property
    def sorted_members(self) -> tuple[str, ...]:
        return tuple(sorted(self.members))


def clone_set_record(clone_set: CloneSet) -> dict:
    record: dict = {
        "set_id": clone_set.set_id,
        "provenance": clone_set.provenance.kind,
        "members": list(clone_set.sorted_members),
    }
    if clone_set.provenance.topic is not None:
        record["topic"] = clone_set.provenance.topic
    if clone_set.provenance.pattern is not None:
        record["pattern"] = clone_set.provenance.pattern
    return record


def write_clone_sets(
    path: str | Path,
    clone_sets: Sequence[CloneSet],
    *,
    seed: int,
    config_hash: str,
) -> None:
    payload = {
        "format": "semclone-clonesets/1",
        "seed": seed,
        "config_hash": config_hash,
        "clone_sets": [clone_set_record(cs) for cs in clone_sets],
    }
    Path(path).write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def read_member_sets(path: str | Path) -> list[frozenset[str]]:
    """Read clone-set members from either the native format or a bare
    JSON list of member lists."""
    path = Path(path)
    if not path.is_file():
        raise InputError(f"clone-set file not found: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from None
    if isinstance(data, dict):
        records = data.get("clone_sets")
        if not isinstance(records, list):
            raise InputError(f"{path}: missing 'clone_sets' list")
        raw_sets: Iterable = (record.get("members", []) for record in records)
    elif isinstance(data, list):
        raw_sets = data
    else:
        raise InputError(f"{path}: expected a JSON list or object")
    member_sets = []
    for i, members in enumerate(raw_sets):
        if not isinstance(members, list) or not all(isinstance(m, str) for m in members):
            raise InputError(f"{path}: clone set {i} must be a list of strings")
        member_sets.append(frozenset(members))
    return member_sets
