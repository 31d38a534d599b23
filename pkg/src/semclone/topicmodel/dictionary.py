"""Dictionary and document-term matrix."""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from semclone.corpus.builder import Corpus
from semclone.errors import InputError


@dataclass(frozen=True)
class Dictionary:
    id_to_token: tuple[str, ...]

    @property
    def token_to_id(self) -> dict[str, int]:
        cached = self.__dict__.get("_token_to_id")
        if cached is None:
            cached = {token: i for i, token in enumerate(self.id_to_token)}
            object.__setattr__(self, "_token_to_id", cached)
        return cached

    @property
    def size(self) -> int:
        return len(self.id_to_token)

    @property
    def sha256(self) -> str:
        canonical = json.dumps(list(self.id_to_token), separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def __contains__(self, token: str) -> bool:
        return token in self.token_to_id


def build_dictionary(corpus: Corpus) -> Dictionary:
    """One dense id per distinct token, assigned in order of first
    appearance across documents.  Cross-language corpora share one id
    space."""
    if not corpus.documents:
        raise InputError("cannot build a dictionary from an empty corpus")
    seen: dict[str, int] = {}
    for document in corpus.documents:
        for token in document.tokens:
            if token not in seen:
                seen[token] = len(seen)
    return Dictionary(id_to_token=tuple(seen))


@dataclass(frozen=True)
class DocTermMatrix:
    num_docs: int
    num_terms: int
    rows: tuple[tuple[tuple[int, int], ...], ...]  # per doc: ((word_id, count), ...)

    def row_sum(self, doc_index: int) -> int:
        return sum(count for _, count in self.rows[doc_index])

    def token_stream(self, doc_index: int) -> list[int]:
        """Word ids of a document expanded with multiplicity, in ascending
        word-id order (the pinned order used by the sampler)."""
        stream: list[int] = []
        for word_id, count in self.rows[doc_index]:
            stream.extend([word_id] * count)
        return stream

    def token_streams(self) -> list[list[int]]:
        return [self.token_stream(d) for d in range(self.num_docs)]


def build_doc_term(corpus: Corpus, dictionary: Dictionary) -> DocTermMatrix:
    """Sparse counts: cell (i, j) is the frequency of word j in document i."""
    token_to_id = dictionary.token_to_id
    rows: list[tuple[tuple[int, int], ...]] = []
    for document in corpus.documents:
        counts: Counter[int] = Counter()
        for token in document.tokens:
            word_id = token_to_id.get(token)
            if word_id is None:
                raise InputError(
                    f"token {token!r} in {document.file_id} is not in the dictionary; "
                    "build the dictionary from the same corpus or a superset"
                )
            counts[word_id] += 1
        rows.append(tuple(sorted(counts.items())))
    return DocTermMatrix(
        num_docs=len(rows), num_terms=dictionary.size, rows=tuple(rows)
    )


def matrix_from_streams(streams: Iterable[Iterable[int]], num_terms: int) -> DocTermMatrix:
    """Build a matrix directly from word-id streams (used by tests and
    fold-in helpers)."""
    rows = tuple(tuple(sorted(Counter(stream).items())) for stream in streams)
    return DocTermMatrix(num_docs=len(rows), num_terms=num_terms, rows=rows)
