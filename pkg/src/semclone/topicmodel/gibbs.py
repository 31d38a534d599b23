"""Collapsed Gibbs sampling for the topic model.

The per-token conditional integrates out the document-topic and topic-word
distributions: a token of word w in document d is reassigned to topic k
with probability proportional to

    (n_dk[d][k] + alpha) * (n_kw[k][w] + beta) / (n_k[k] + V * beta)

where the counts exclude the token being resampled.  All count state is
kept in plain Python integers; floating point enters only in the sampling
weights, which are accumulated in ascending topic order so results are
reproducible across platforms for a given seed.  Randomness comes from one
``random.Random(seed)`` stream consumed in document order, token order,
sweep by sweep.
"""

from __future__ import annotations

import json
import os
import random
from bisect import bisect_left
from dataclasses import dataclass
from pathlib import Path

from semclone.errors import ConfigError, InputError, InternalInvariantError
from semclone.topicmodel.dictionary import DocTermMatrix

# Full count-consistency checks after every sweep are quadratic-ish in
# corpus size, so they are opt-in; the final state is always validated.
_VALIDATE_SWEEPS = os.environ.get("SEMCLONE_VALIDATE_SWEEPS", "") not in ("", "0")


@dataclass(frozen=True)
class TopicModel:
    num_topics: int
    alpha: float
    beta: float
    seed: int
    iterations: int
    passes: int
    num_terms: int
    doc_topic_counts: tuple[tuple[int, ...], ...]  # n_dk
    topic_word_counts: tuple[tuple[int, ...], ...]  # n_kw
    topic_totals: tuple[int, ...]  # n_k
    assignments: tuple[tuple[int, ...], ...] | None = None  # z, per token

    @property
    def num_docs(self) -> int:
        return len(self.doc_topic_counts)


def train_lda(
    matrix: DocTermMatrix,
    num_topics: int,
    alpha: float | None = None,
    beta: float = 0.01,
    iterations: int = 1000,
    passes: int = 50,
    seed: int = 100,
) -> TopicModel:
    """Train by sequential-scan collapsed Gibbs sampling.

    Runs ``passes * iterations`` full sweeps over every token.  Fully
    deterministic given the seed.
    """
    if num_topics < 1:
        raise ConfigError("num_topics must be >= 1")
    resolved_alpha = 50.0 / num_topics if alpha is None else alpha
    if resolved_alpha <= 0 or beta <= 0:
        raise ConfigError("alpha and beta must be > 0")
    if iterations < 1 or passes < 1:
        raise ConfigError("iterations and passes must be >= 1")
    if matrix.num_docs == 0:
        raise InputError("cannot train on an empty document-term matrix")

    docs = matrix.token_streams()
    num_terms = matrix.num_terms
    rng = random.Random(seed)

    z = [[rng.randrange(num_topics) for _ in doc] for doc in docs]
    n_dk = [[0] * num_topics for _ in docs]
    n_kw = [[0] * num_terms for _ in range(num_topics)]
    n_k = [0] * num_topics
    for d, doc in enumerate(docs):
        row = n_dk[d]
        zd = z[d]
        for i, w in enumerate(doc):
            k = zd[i]
            row[k] += 1
            n_kw[k][w] += 1
            n_k[k] += 1

    vbeta = num_terms * beta
    cumulative = [0.0] * num_topics
    topics = range(num_topics)
    sweeps = passes * iterations
    for _ in range(sweeps):
        for d, doc in enumerate(docs):
            row = n_dk[d]
            zd = z[d]
            for i, w in enumerate(doc):
                k = zd[i]
                row[k] -= 1
                n_kw[k][w] -= 1
                n_k[k] -= 1
                total = 0.0
                for t in topics:
                    total += (
                        (row[t] + resolved_alpha)
                        * (n_kw[t][w] + beta)
                        / (n_k[t] + vbeta)
                    )
                    cumulative[t] = total
                if not 0.0 < total < float("inf"):
                    raise InternalInvariantError(
                        "sampling weights must be positive and finite"
                    )
                k = bisect_left(cumulative, rng.random() * total)
                if k >= num_topics:  # guard against float round-off at the top
                    k = num_topics - 1
                row[k] += 1
                n_kw[k][w] += 1
                n_k[k] += 1
                zd[i] = k
        if _VALIDATE_SWEEPS:
            _validate_counts(docs, n_dk, n_kw, n_k)
    _validate_counts(docs, n_dk, n_kw, n_k)

    return TopicModel(
        num_topics=num_topics,
        alpha=resolved_alpha,
        beta=beta,
        seed=seed,
        iterations=iterations,
        passes=passes,
        num_terms=num_terms,
        doc_topic_counts=tuple(tuple(row) for row in n_dk),
        topic_word_counts=tuple(tuple(row) for row in n_kw),
        topic_totals=tuple(n_k),
        assignments=tuple(tuple(zd) for zd in z),
    )


def _validate_counts(
    docs: list[list[int]],
    n_dk: list[list[int]],
    n_kw: list[list[int]],
    n_k: list[int],
) -> None:
    for d, doc in enumerate(docs):
        if sum(n_dk[d]) != len(doc):
            raise InternalInvariantError(f"doc {d}: topic counts do not sum to length")
        if any(c < 0 for c in n_dk[d]):
            raise InternalInvariantError(f"doc {d}: negative topic count")
    for k, row in enumerate(n_kw):
        if sum(row) != n_k[k]:
            raise InternalInvariantError(f"topic {k}: word counts do not sum to total")
        if any(c < 0 for c in row):
            raise InternalInvariantError(f"topic {k}: negative word count")


def dominant_topic(model: TopicModel, doc_index: int) -> int:
    """Argmax of the document's smoothed topic counts; ties go to the
    lowest topic id."""
    row = model.doc_topic_counts[doc_index]
    best = 0
    best_value = row[0] + model.alpha
    for k in range(1, model.num_topics):
        value = row[k] + model.alpha
        if value > best_value:
            best = k
            best_value = value
    return best


def fold_in(
    model: TopicModel,
    word_ids: list[int],
    sweeps: int = 20,
    seed: int = 100,
) -> tuple[int, ...]:
    """Topic counts for an unseen document: Gibbs sweeps over its tokens
    with the trained topic-word counts frozen.  Deterministic given seed."""
    if any(w < 0 or w >= model.num_terms for w in word_ids):
        raise InputError("word id outside the trained vocabulary")
    rng = random.Random(seed)
    num_topics = model.num_topics
    n_kw = model.topic_word_counts
    n_k = model.topic_totals
    vbeta = model.num_terms * model.beta
    alpha, beta = model.alpha, model.beta
    z = [rng.randrange(num_topics) for _ in word_ids]
    local = [0] * num_topics
    for k in z:
        local[k] += 1
    cumulative = [0.0] * num_topics
    for _ in range(sweeps):
        for i, w in enumerate(word_ids):
            local[z[i]] -= 1
            total = 0.0
            for t in range(num_topics):
                total += (local[t] + alpha) * (n_kw[t][w] + beta) / (n_k[t] + vbeta)
                cumulative[t] = total
            k = bisect_left(cumulative, rng.random() * total)
            if k >= num_topics:
                k = num_topics - 1
            local[k] += 1
            z[i] = k
    return tuple(local)


def save_model(model: TopicModel, path: str | Path, dictionary_sha256: str) -> None:
    payload = {
        "format": "semclone-lda/1",
        "num_topics": model.num_topics,
        "alpha": model.alpha,
        "beta": model.beta,
        "seed": model.seed,
        "iterations": model.iterations,
        "passes": model.passes,
        "num_terms": model.num_terms,
        "doc_topic_counts": [list(row) for row in model.doc_topic_counts],
        "topic_word_counts": [list(row) for row in model.topic_word_counts],
        "dictionary_sha256": dictionary_sha256,
    }
    Path(path).write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def load_model(path: str | Path) -> tuple[TopicModel, str]:
    """Load a checkpoint; returns the model and the dictionary hash it was
    trained against."""
    path = Path(path)
    if not path.is_file():
        raise InputError(f"model checkpoint not found: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from None
    if data.get("format") != "semclone-lda/1":
        raise InputError(f"{path}: not a semclone model checkpoint")
    topic_word = tuple(tuple(row) for row in data["topic_word_counts"])
    model = TopicModel(
        num_topics=data["num_topics"],
        alpha=data["alpha"],
        beta=data["beta"],
        seed=data["seed"],
        iterations=data["iterations"],
        passes=data["passes"],
        num_terms=data["num_terms"],
        doc_topic_counts=tuple(tuple(row) for row in data["doc_topic_counts"]),
        topic_word_counts=topic_word,
        topic_totals=tuple(sum(row) for row in topic_word),
        assignments=None,
    )
    return model, data["dictionary_sha256"]
