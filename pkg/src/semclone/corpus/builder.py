"""Assemble a corpus of documents from scanned source files."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from semclone.config import CorpusConfig, Language
from semclone.corpus.comments import CommentKind, classify_comment, extract_comments
from semclone.corpus.scanner import SourceFile
from semclone.corpus.textnorm import normalize, strip_markup
from semclone.errors import InputError

logger = logging.getLogger(__name__)

_EXCLUDED_KINDS = frozenset({CommentKind.COPYRIGHT, CommentKind.TASK})


@dataclass(frozen=True)
class Document:
    file_id: str
    tokens: tuple[str, ...]
    language: Language


@dataclass(frozen=True)
class Corpus:
    documents: tuple[Document, ...]
    languages_present: frozenset[Language]
    excluded_empty: tuple[str, ...]  # file ids with no usable comment tokens

    def __post_init__(self) -> None:
        ids = [d.file_id for d in self.documents]
        if len(ids) != len(set(ids)):
            raise ValueError("duplicate file_id in corpus")

    @property
    def file_ids(self) -> tuple[str, ...]:
        return tuple(d.file_id for d in self.documents)


def comment_tokens(source: SourceFile, config: CorpusConfig) -> list[str]:
    """Normalized tokens of all non-copyright, non-task comments of a file,
    concatenated in file order."""
    tokens: list[str] = []
    for index, block in enumerate(extract_comments(source)):
        kind = classify_comment(
            block,
            is_first=index == 0,
            copyright_keywords=config.copyright_keywords,
            task_markers=config.task_markers,
        )
        if kind in _EXCLUDED_KINDS:
            continue
        tokens.extend(
            normalize(
                strip_markup(block.text),
                config.stopwords,
                split_camel_case=config.split_camel_case,
                stem=config.stem,
            )
        )
    return tokens


def build_corpus(files: Sequence[SourceFile], config: CorpusConfig) -> Corpus:
    """Build one document per file; files with zero usable tokens are
    excluded and reported via ``Corpus.excluded_empty``."""
    documents: list[Document] = []
    excluded: list[str] = []
    for source in files:
        tokens = comment_tokens(source, config)
        if not tokens:
            logger.info("excluding %s: no usable comment tokens", source.file_id)
            excluded.append(source.file_id)
            continue
        documents.append(
            Document(file_id=source.file_id, tokens=tuple(tokens), language=source.language)
        )
    return Corpus(
        documents=tuple(documents),
        languages_present=frozenset(d.language for d in documents),
        excluded_empty=tuple(excluded),
    )


def build_report(corpus: Corpus, skipped_io: Iterable[tuple[str, str]]) -> dict:
    return {
        "included": list(corpus.file_ids),
        "excluded_empty": list(corpus.excluded_empty),
        "skipped_io": [{"file_id": fid, "reason": reason} for fid, reason in skipped_io],
    }


def write_corpus(path: str | Path, corpus: Corpus, *, seed: int, config_hash: str) -> None:
    payload = {
        "format": "semclone-corpus/1",
        "seed": seed,
        "config_hash": config_hash,
        "documents": [
            {
                "file_id": d.file_id,
                "language": d.language.value,
                "tokens": list(d.tokens),
            }
            for d in corpus.documents
        ],
        "excluded_empty": list(corpus.excluded_empty),
    }
    Path(path).write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def load_corpus(path: str | Path) -> Corpus:
    path = Path(path)
    if not path.is_file():
        raise InputError(f"corpus file not found: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from None
    if data.get("format") != "semclone-corpus/1":
        raise InputError(f"{path}: not a semclone corpus file")
    documents = tuple(
        Document(
            file_id=record["file_id"],
            tokens=tuple(record["tokens"]),
            language=Language(record["language"]),
        )
        for record in data["documents"]
    )
    return Corpus(
        documents=documents,
        languages_present=frozenset(d.language for d in documents),
        excluded_empty=tuple(data.get("excluded_empty", ())),
    )
