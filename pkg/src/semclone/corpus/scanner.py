"""Source-tree scanning."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

from semclone.config import CorpusConfig, Language
from semclone.errors import InputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SourceFile:
    file_id: str  # posix relative path, unique within a corpus
    path: Path
    language: Language
    text: str


@dataclass(frozen=True)
class ScanResult:
    files: tuple[SourceFile, ...]
    skipped: tuple[tuple[str, str], ...] = field(default_factory=tuple)  # (file_id, reason)


def scan_files(root: str | Path, config: CorpusConfig) -> ScanResult:
    """Collect all source files under ``root`` whose extension is mapped to a
    language, in deterministic lexicographic order of relative path.

    Unreadable individual files are skipped with a warning and recorded;
    an unreadable root is an error.
    """
    root = Path(root)
    if not root.is_dir():
        raise InputError(f"corpus root is not a readable directory: {root}")
    files: list[SourceFile] = []
    skipped: list[tuple[str, str]] = []
    candidates = sorted(
        (p for p in root.rglob("*") if p.is_file()),
        key=lambda p: p.relative_to(root).as_posix(),
    )
    for path in candidates:
        language = config.extension_map.get(path.suffix.lower())
        if language is None:
            continue
        file_id = path.relative_to(root).as_posix()
        try:
            raw = path.read_bytes()
        except OSError as exc:
            logger.warning("skipping unreadable file %s: %s", file_id, exc)
            skipped.append((file_id, str(exc)))
            continue
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError:
            logger.warning("file %s is not valid UTF-8; decoding with replacement", file_id)
            text = raw.decode("utf-8", errors="replace")
        files.append(SourceFile(file_id=file_id, path=path, language=language, text=text))
    return ScanResult(files=tuple(files), skipped=tuple(skipped))
