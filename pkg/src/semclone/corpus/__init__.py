"""Corpus construction: scan a source tree, extract and classify comments,
normalize text to token streams, and assemble documents."""

from semclone.config import CorpusConfig, Language
from semclone.corpus.builder import Corpus, Document, build_corpus, build_report
from semclone.corpus.comments import (
    CommentBlock,
    CommentKind,
    classify_comment,
    extract_comments,
)
from semclone.corpus.scanner import ScanResult, SourceFile, scan_files
from semclone.corpus.textnorm import normalize, strip_markup

__all__ = [
    "CommentBlock",
    "CommentKind",
    "Corpus",
    "CorpusConfig",
    "Document",
    "Language",
    "ScanResult",
    "SourceFile",
    "build_corpus",
    "build_report",
    "classify_comment",
    "extract_comments",
    "normalize",
    "scan_files",
    "strip_markup",
]
