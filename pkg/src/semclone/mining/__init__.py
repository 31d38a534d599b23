"""Code channel: frequent-subgraph mining over a graph database, random-walk
sampling of maximal patterns, selection probabilities, Horvitz-Thompson
estimation, and lifting patterns to file-level clone sets."""

from semclone.mining.canon import canonical_form, canonical_pattern_graph
from semclone.mining.clonesets import patterns_to_clone_sets, write_pattern_files
from semclone.mining.embed import find_embeddings
from semclone.mining.ht import ht_estimate
from semclone.mining.lattice import (
    ROOT_CODE,
    Lattice,
    Pattern,
    enumerate_lattice,
    extensions,
    make_root,
    selection_probabilities,
    transition_row,
)
from semclone.mining.walk import (
    LatticeWalker,
    derive_walk_seed,
    random_walk,
    sample_maximal,
)

__all__ = [
    "Lattice",
    "LatticeWalker",
    "Pattern",
    "ROOT_CODE",
    "canonical_form",
    "canonical_pattern_graph",
    "derive_walk_seed",
    "enumerate_lattice",
    "extensions",
    "find_embeddings",
    "ht_estimate",
    "make_root",
    "patterns_to_clone_sets",
    "random_walk",
    "sample_maximal",
    "selection_probabilities",
    "transition_row",
    "write_pattern_files",
]
