"""Comment extraction and classification.

Extraction is done by small lexical scanners, not bare pattern matches:
comment markers inside string and character literals must not start a
comment, which requires tracking quoting state character by character.

For C-family sources (Java, the bundled mini language) the scanner
recognizes ``//`` line comments, ``/* */`` block comments, and ``/** */``
doc comments.  For Python-family sources it recognizes ``#`` line comments
and triple-quoted string literals in docstring position (start of module,
or first statement after a ``def``/``class`` header line); triple-quoted
strings anywhere else are plain literals and are not extracted.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from semclone.config import (
    DEFAULT_COPYRIGHT_KEYWORDS,
    DEFAULT_TASK_MARKERS,
    Language,
)
from semclone.corpus.scanner import SourceFile

logger = logging.getLogger(__name__)


class CommentKind(Enum):
    LINE = "line"
    BLOCK = "block"
    DOC = "doc"
    COPYRIGHT = "copyright"
    TASK = "task"


@dataclass(frozen=True)
class CommentBlock:
    kind: CommentKind
    text: str  # raw inner text, delimiters stripped
    start_line: int
    end_line: int

    def __post_init__(self) -> None:
        if self.start_line > self.end_line:
            raise ValueError("comment block with start_line > end_line")


def extract_comments(source: SourceFile) -> list[CommentBlock]:
    """Extract all comment blocks from a source file, in file order."""
    if source.language is Language.PYTHON_LIKE:
        return _extract_python_like(source.text, source.file_id)
    return _extract_c_like(source.text, source.file_id)


def classify_comment(
    block: CommentBlock,
    is_first: bool,
    copyright_keywords: frozenset[str] = DEFAULT_COPYRIGHT_KEYWORDS,
    task_markers: frozenset[str] = DEFAULT_TASK_MARKERS,
) -> CommentKind:
    """Refine a block's kind using its position and content.

    Only the first comment of a file can be a copyright header; task
    markers are matched case-sensitively anywhere in the text.
    """
    if is_first:
        lowered = block.text.lower()
        if any(keyword in lowered for keyword in copyright_keywords):
            return CommentKind.COPYRIGHT
    if any(marker in block.text for marker in task_markers):
        return CommentKind.TASK
    return block.kind


def _extract_c_like(text: str, file_id: str) -> list[CommentBlock]:
    blocks: list[CommentBlock] = []
    i = 0
    n = len(text)
    line = 1
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            i += 1
            continue
        if ch in ('"', "'"):
            # String/char literal: comment markers inside are not comments.
            quote = ch
            i += 1
            while i < n:
                c = text[i]
                if c == "\\" and i + 1 < n:
                    i += 2
                    continue
                if c == quote:
                    i += 1
                    break
                if c == "\n":
                    # Broken literal; recover at end of line.
                    break
                i += 1
            continue
        if ch == "/" and i + 1 < n:
            nxt = text[i + 1]
            if nxt == "/":
                end = text.find("\n", i + 2)
                body = text[i + 2 : end if end != -1 else n]
                blocks.append(CommentBlock(CommentKind.LINE, body, line, line))
                i = end if end != -1 else n
                continue
            if nxt == "*":
                # "/**/" is an empty block comment; "/**" + body is doc.
                is_doc = (
                    i + 2 < n
                    and text[i + 2] == "*"
                    and not (i + 3 < n and text[i + 3] == "/")
                )
                open_len = 3 if is_doc else 2
                kind = CommentKind.DOC if is_doc else CommentKind.BLOCK
                close = text.find("*/", i + open_len)
                if close == -1:
                    body = text[i + open_len :]
                    logger.warning(
                        "%s: unterminated block comment at line %d extends to end of file",
                        file_id,
                        line,
                    )
                    blocks.append(
                        CommentBlock(kind, body, line, line + body.count("\n"))
                    )
                    break
                body = text[i + open_len : close]
                end_line = line + body.count("\n")
                blocks.append(CommentBlock(kind, body, line, end_line))
                line = end_line
                i = close + 2
                continue
        i += 1
    return blocks


_STRING_PREFIXES = {"r", "b", "u", "f", "rb", "br", "fr", "rf", "bf", "fb"}


def _extract_python_like(text: str, file_id: str) -> list[CommentBlock]:
    blocks: list[CommentBlock] = []
    i = 0
    n = len(text)
    line = 1
    # Docstring position: start of module, or the statement right after a
    # def/class header line.  Any other code clears it.
    expect_doc = True
    line_first_word: str | None = None
    line_has_code = False
    last_sig_char = ""

    def end_of_line() -> None:
        nonlocal expect_doc, line_first_word, line_has_code, last_sig_char
        if line_has_code:
            expect_doc = line_first_word in ("def", "class") and last_sig_char == ":"
        line_first_word = None
        line_has_code = False
        last_sig_char = ""

    def note_code(first_word: str, last_char: str) -> None:
        nonlocal expect_doc, line_first_word, line_has_code, last_sig_char
        if line_first_word is None:
            line_first_word = first_word
        line_has_code = True
        last_sig_char = last_char
        expect_doc = False

    while i < n:
        ch = text[i]
        if ch == "\n":
            end_of_line()
            line += 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            continue
        if ch == "#":
            end = text.find("\n", i + 1)
            body = text[i + 1 : end if end != -1 else n]
            blocks.append(CommentBlock(CommentKind.LINE, body, line, line))
            i = end if end != -1 else n
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            word = text[start:i]
            if (
                word.lower() in _STRING_PREFIXES
                and i < n
                and text[i] in ('"', "'")
            ):
                # String prefix; fall through to the quote handling below
                # without treating the prefix as a code word on its own.
                continue
            note_code(word, word[-1])
            continue
        if ch in ('"', "'"):
            triple = text[i : i + 3] in ('"""', "'''")
            doc_position = expect_doc
            if triple:
                quote3 = text[i : i + 3]
                start_line = line
                close = text.find(quote3, i + 3)
                if close == -1:
                    body = text[i + 3 :]
                    if doc_position:
                        logger.warning(
                            "%s: unterminated docstring at line %d extends to end of file",
                            file_id,
                            line,
                        )
                        blocks.append(
                            CommentBlock(
                                CommentKind.DOC, body, start_line,
                                start_line + body.count("\n"),
                            )
                        )
                    note_code("<str>", quote3[-1])
                    break
                body = text[i + 3 : close]
                end_line = start_line + body.count("\n")
                if doc_position:
                    blocks.append(
                        CommentBlock(CommentKind.DOC, body, start_line, end_line)
                    )
                line = end_line
                i = close + 3
                note_code("<str>", quote3[-1])
                continue
            quote = ch
            i += 1
            while i < n:
                c = text[i]
                if c == "\\" and i + 1 < n:
                    i += 2
                    continue
                if c == quote:
                    i += 1
                    break
                if c == "\n":
                    break  # broken single-line literal; recover
                i += 1
            note_code("<str>", quote)
            continue
        note_code("<op>", ch)
        i += 1
    return blocks
