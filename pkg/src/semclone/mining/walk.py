"""Random-walk sampling of maximal frequent patterns.

Walks never need the full lattice: children are computed lazily and
memoized by canonical code, so repeated walks over the same database share
the expensive support computations.  Each walk draws its own seed from the
master seed and its walk index, making results independent of scheduling
order if walks ever run concurrently.
"""

from __future__ import annotations

import hashlib
import random

from semclone.config import MiningConfig
from semclone.errors import NoFrequentPatternsError, ResourceBudgetError
from semclone.mining.lattice import (
    Pattern,
    enumerate_lattice,
    extensions,
    make_root,
    selection_probabilities,
)
from semclone.pdg.veg import GraphDatabase


def derive_walk_seed(master_seed: int, walk_index: int) -> int:
    digest = hashlib.sha256(f"{master_seed}:{walk_index}".encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big")


class LatticeWalker:
    """Runs absorption walks over one database with a shared child cache."""

    def __init__(
        self,
        db: GraphDatabase,
        min_support: int,
        max_edges: int,
        support_mode: str = "embeddings",
    ) -> None:
        self.db = db
        self.min_support = min_support
        self.max_edges = max_edges
        self.support_mode = support_mode
        self._root = make_root()
        self._children: dict[str, tuple[Pattern, ...]] = {}

    def children(self, pattern: Pattern) -> tuple[Pattern, ...]:
        code = pattern.canonical_code
        cached = self._children.get(code)
        if cached is None:
            if pattern.graph.edge_count >= self.max_edges:
                cached = ()
            else:
                cached = tuple(
                    extensions(pattern, self.db, self.min_support, self.support_mode)
                )
            self._children[code] = cached
        return cached

    @property
    def root_children(self) -> tuple[Pattern, ...]:
        return self.children(self._root)

    def walk(self, seed: int) -> Pattern:
        """One absorption walk; deterministic given the seed."""
        rng = random.Random(seed)
        current = self._root
        while True:
            kids = self.children(current)
            if not kids:
                if current.graph.vertex_count == 0:
                    raise NoFrequentPatternsError(
                        f"no frequent pattern at min_support={self.min_support}"
                    )
                current.is_maximal = True
                return current
            current = kids[rng.randrange(len(kids))]


def random_walk(
    db: GraphDatabase, min_support: int, max_edges: int, seed: int
) -> Pattern:
    """Single uncached walk; see LatticeWalker for repeated sampling."""
    return LatticeWalker(db, min_support, max_edges).walk(seed)


def sample_maximal(
    db: GraphDatabase,
    config: MiningConfig,
    seed: int,
) -> list[Pattern]:
    """Run ``sample_size`` walks, drop patterns below ``min_vertices``,
    deduplicate by canonical code, and (optionally) attach exact selection
    probabilities from a full lattice enumeration.

    Returns patterns in first-encounter (walk index) order.  An empty
    database or an unreachable support threshold yields an empty list.
    """
    walker = LatticeWalker(db, config.min_support, config.max_edges, config.support_mode)
    if not walker.root_children:
        return []
    found: dict[str, Pattern] = {}
    for index in range(config.sample_size):
        pattern = walker.walk(derive_walk_seed(seed, index))
        if pattern.graph.vertex_count < config.min_vertices:
            continue
        found.setdefault(pattern.canonical_code, pattern)
    patterns = list(found.values())
    if config.with_probability:
        try:
            lattice = enumerate_lattice(
                db,
                config.min_support,
                config.max_edges,
                node_budget=config.node_budget,
                support_mode=config.support_mode,
            )
        except ResourceBudgetError as exc:
            raise ResourceBudgetError(
                f"{exc}; re-run with selection probabilities disabled "
                "(with_probability = false) to sample without enumerating the lattice"
            ) from None
        probabilities = selection_probabilities(lattice)
        for pattern in patterns:
            pattern.selection_probability = probabilities.get(pattern.canonical_code)
    return patterns
