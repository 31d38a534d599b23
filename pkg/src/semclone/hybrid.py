"""Combine the comment channel and the code channel.

Stage 1 runs the comment channel over the whole tree.  Stage 2 restricts
the graph database to the files the comment channel grouped (or, in
cross-check mode, to the superset of similarity-matched pairs from both
channels) and mines there.  The point of the reduction is cost: mining
scales badly with database size, and the cheap channel shrinks the
database before the expensive one runs.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Sequence

from semclone.clonesets import CloneSet, Provenance
from semclone.config import RunConfig
from semclone.corpus.builder import Corpus, build_corpus
from semclone.corpus.scanner import ScanResult, scan_files
from semclone.errors import ConfigError, InputError
from semclone.mining.clonesets import patterns_to_clone_sets
from semclone.mining.lattice import Pattern
from semclone.mining.walk import sample_maximal
from semclone.pdg.builder import build_pdg
from semclone.pdg.minilang import parse_program
from semclone.pdg.veg import GraphDatabase, load_veg
from semclone.topicmodel.dictionary import build_dictionary, build_doc_term
from semclone.topicmodel.gibbs import dominant_topic, train_lda
from semclone.topicmodel.grouping import form_clone_sets

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatchedPair:
    lda_set: CloneSet
    pdg_set: CloneSet
    overlap: int

    def __post_init__(self) -> None:
        if self.overlap < 1:
            raise ValueError("matched pairs must share at least one file")


def match_sets(
    lda_sets: Sequence[CloneSet], pdg_sets: Sequence[CloneSet], n: int
) -> list[MatchedPair]:
    """All (comment-set, code-set) pairs sharing at least ``n`` files, in
    input order."""
    if n < 1:
        raise ConfigError("similarity index must be >= 1")
    pairs: list[MatchedPair] = []
    for lda_set in lda_sets:
        for pdg_set in pdg_sets:
            overlap = len(lda_set.members & pdg_set.members)
            if overlap >= n:
                pairs.append(MatchedPair(lda_set=lda_set, pdg_set=pdg_set, overlap=overlap))
    return pairs


def build_superset(pairs: Sequence[MatchedPair]) -> frozenset[str]:
    """Unique file names across both sides of every matched pair."""
    members: set[str] = set()
    for pair in pairs:
        members |= pair.lda_set.members
        members |= pair.pdg_set.members
    return frozenset(members)


def similarity_profile(
    lda_sets: Sequence[CloneSet], pdg_sets: Sequence[CloneSet]
) -> dict[int, int]:
    """Matched-pair counts for every similarity index up to the largest
    overlap present."""
    pairs = match_sets(lda_sets, pdg_sets, 1) if lda_sets and pdg_sets else []
    if not pairs:
        return {}
    max_overlap = max(pair.overlap for pair in pairs)
    return {
        n: sum(1 for pair in pairs if pair.overlap >= n)
        for n in range(1, max_overlap + 1)
    }


@dataclass(frozen=True)
class HybridResult:
    clone_sets: tuple[CloneSet, ...]
    lda_sets: tuple[CloneSet, ...]
    patterns: tuple[Pattern, ...]
    database: GraphDatabase | None
    report: dict


def comment_channel(corpus: Corpus, config: RunConfig) -> list[CloneSet]:
    """Dictionary, doc-term matrix, topic model, dominant-topic grouping."""
    dictionary = build_dictionary(corpus)
    matrix = build_doc_term(corpus, dictionary)
    model = train_lda(
        matrix,
        num_topics=config.lda.num_topics,
        alpha=config.lda.alpha,
        beta=config.lda.beta,
        iterations=config.lda.iterations,
        passes=config.lda.passes,
        seed=config.seed,
    )
    assignments = {
        document.file_id: dominant_topic(model, index)
        for index, document in enumerate(corpus.documents)
    }
    return form_clone_sets(assignments)


def build_database(
    scan: ScanResult, config: RunConfig, root: Path
) -> GraphDatabase | None:
    """Graph database for the code channel: either parse mini-language
    sources or load a prebuilt interchange file."""
    if config.hybrid.veg_path is not None:
        veg_path = Path(config.hybrid.veg_path)
        if not veg_path.is_absolute():
            veg_path = root / veg_path
        return load_veg(veg_path)
    graphs = []
    for source in scan.files:
        if source.path.suffix != ".mini":
            continue
        graphs.append(build_pdg(parse_program(source.text), source.file_id))
    if not graphs:
        return None
    return GraphDatabase.from_graphs(graphs)


def hybrid_pipeline(corpus_root: str | Path, config: RunConfig) -> HybridResult:
    """Two-stage pipeline; see the module docstring.

    Stage-2 clone sets whose membership exactly matches a stage-1 set are
    reported with hybrid provenance.
    """
    root = Path(corpus_root)
    scan = scan_files(root, config.corpus)
    if not scan.files:
        raise InputError(f"no source files found under {root}")
    corpus = build_corpus(scan.files, config.corpus)
    if not corpus.documents:
        raise InputError("no documents with comment tokens; nothing to model")

    lda_sets = comment_channel(corpus, config)
    files_total = len(corpus.documents)
    base_report = {
        "files_total": files_total,
        "mode": config.hybrid.mode,
        "similarity_threshold": config.hybrid.similarity_threshold,
    }
    if not lda_sets:
        logger.warning("stage 1 produced no clone sets; nothing to mine")
        return HybridResult(
            clone_sets=(),
            lda_sets=(),
            patterns=(),
            database=None,
            report={**base_report, "files_retained": 0, "pairs_by_similarity": {}},
        )

    database = build_database(scan, config, root)
    if database is None:
        raise InputError(
            "no graph source for stage 2: provide .mini files or hybrid.veg_path"
        )

    if config.hybrid.mode == "superset":
        full_patterns = sample_maximal(database, config.mining, config.seed)
        full_sets = patterns_to_clone_sets(full_patterns, database)
        pairs = match_sets(lda_sets, full_sets, config.hybrid.similarity_threshold)
        retained = build_superset(pairs)
    else:
        retained = frozenset().union(*(cs.members for cs in lda_sets))
    retained &= database.file_ids

    restricted = database.restricted_to(retained)
    patterns = sample_maximal(restricted, config.mining, config.seed)
    stage2_sets = patterns_to_clone_sets(patterns, restricted)

    lda_memberships = {cs.members: cs for cs in lda_sets}
    final_sets: list[CloneSet] = []
    for clone_set in stage2_sets:
        lda_match = lda_memberships.get(clone_set.members)
        if lda_match is not None:
            final_sets.append(
                replace(
                    clone_set,
                    provenance=Provenance.hybrid(
                        topic=lda_match.provenance.topic,
                        pattern_id=clone_set.provenance.pattern,
                    ),
                )
            )
        else:
            final_sets.append(clone_set)

    report = {
        **base_report,
        "files_retained": len(retained),
        "pairs_by_similarity": similarity_profile(lda_sets, stage2_sets),
    }
    return HybridResult(
        clone_sets=tuple(final_sets),
        lda_sets=tuple(lda_sets),
        patterns=tuple(patterns),
        database=restricted,
        report=report,
    )
