"""Group files sharing a dominant topic into clone sets."""

from __future__ import annotations

from typing import Mapping

from semclone.clonesets import CloneSet, Provenance


def form_clone_sets(assignments: Mapping[str, int]) -> list[CloneSet]:
    """Group file ids by assigned topic, dropping singleton groups.

    Output is ordered by topic id, members by file id.
    """
    groups: dict[int, list[str]] = {}
    for file_id, topic in assignments.items():
        groups.setdefault(topic, []).append(file_id)
    clone_sets: list[CloneSet] = []
    for topic in sorted(groups):
        members = sorted(groups[topic])
        if len(members) < 2:
            continue
        clone_sets.append(
            CloneSet(
                set_id=f"t{topic}",
                members=frozenset(members),
                provenance=Provenance.from_topic(topic),
            )
        )
    return clone_sets
