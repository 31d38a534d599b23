from __future__ import annotations

import logging
from pathlib import Path

from semclone.config import Language
from semclone.corpus.comments import CommentKind, classify_comment, extract_comments
from semclone.corpus.scanner import SourceFile


def java_file(text: str) -> SourceFile:
    return SourceFile(file_id="t.java", path=Path("t.java"), language=Language.JAVA_LIKE, text=text)


def py_file(text: str) -> SourceFile:
    return SourceFile(file_id="t.py", path=Path("t.py"), language=Language.PYTHON_LIKE, text=text)


def test_java_line_comment_strips_delimiter() -> None:
    blocks = extract_comments(java_file("int x; // counter\n"))
    assert [(b.kind, b.text, b.start_line, b.end_line) for b in blocks] == [
        (CommentKind.LINE, " counter", 1, 1)
    ]


def test_java_marker_in_string_is_not_a_comment() -> None:
    assert extract_comments(java_file('String s = "// not a comment";\n')) == []


def test_java_marker_in_char_literal_is_not_a_comment() -> None:
    assert extract_comments(java_file("char c = '/'; char d = '\"'; // real\n"))[0].text == " real"


def test_java_block_and_doc_kinds() -> None:
    text = "/* plain */\n/** Draws the figure */\n/**/\n"
    blocks = extract_comments(java_file(text))
    assert [(b.kind, b.text) for b in blocks] == [
        (CommentKind.BLOCK, " plain "),
        (CommentKind.DOC, " Draws the figure "),
        (CommentKind.BLOCK, ""),
    ]


def test_java_multiline_block_line_numbers() -> None:
    text = "int a;\n/* one\n two\n three */\nint b;\n"
    (block,) = extract_comments(java_file(text))
    assert (block.start_line, block.end_line) == (2, 4)


def test_java_unterminated_block_extends_to_eof(caplog) -> None:
    with caplog.at_level(logging.WARNING):
        blocks = extract_comments(java_file("int a;\n/* open\nmore"))
    assert len(blocks) == 1
    assert blocks[0].text == " open\nmore"
    assert blocks[0].end_line == 3
    assert "unterminated" in caplog.text


def test_python_docstring_at_module_top() -> None:
    blocks = extract_comments(py_file('"""Create window"""\nx = 1\n'))
    assert [(b.kind, b.text) for b in blocks] == [(CommentKind.DOC, "Create window")]


def test_python_hash_comment_and_string_exclusion() -> None:
    text = 's = "# nope"\n# real comment\nt = \'#0\'\n'
    blocks = extract_comments(py_file(text))
    assert [(b.kind, b.text, b.start_line) for b in blocks] == [
        (CommentKind.LINE, " real comment", 2)
    ]


def test_python_def_docstring_recognized() -> None:
    text = "def f():\n    '''does things'''\n    return 1\n"
    blocks = extract_comments(py_file(text))
    assert [(b.kind, b.text) for b in blocks] == [(CommentKind.DOC, "does things")]


def test_python_triple_string_outside_docstring_position_is_code() -> None:
    text = 'x = 1\ns = """not a docstring"""\n'
    assert extract_comments(py_file(text)) == []


def test_python_prefixed_string_is_still_a_string() -> None:
    text = 'x = r"# raw not comment"\n# yes\n'
    blocks = extract_comments(py_file(text))
    assert [b.text for b in blocks] == [" yes"]


def test_python_class_docstring_multiline_lines() -> None:
    text = "class C:\n    '''first\n    second'''\n    pass\n"
    (block,) = extract_comments(py_file(text))
    assert block.kind is CommentKind.DOC
    assert (block.start_line, block.end_line) == (2, 3)


def test_classify_copyright_only_when_first() -> None:
    from semclone.corpus.comments import CommentBlock

    first = CommentBlock(CommentKind.BLOCK, " Copyright 2006 owners ", 1, 1)
    later = CommentBlock(CommentKind.BLOCK, " Copyright 2006 owners ", 9, 9)
    assert classify_comment(first, is_first=True) is CommentKind.COPYRIGHT
    assert classify_comment(later, is_first=False) is CommentKind.BLOCK


def test_classify_task_marker() -> None:
    from semclone.corpus.comments import CommentBlock

    block = CommentBlock(CommentKind.LINE, " TODO fix overflow", 3, 3)
    assert classify_comment(block, is_first=False) is CommentKind.TASK
    lowercase = CommentBlock(CommentKind.LINE, " todo not a marker", 3, 3)
    assert classify_comment(lowercase, is_first=False) is CommentKind.LINE


def test_classify_doc_keeps_kind() -> None:
    from semclone.corpus.comments import CommentBlock

    block = CommentBlock(CommentKind.DOC, " Draws the figure ", 2, 2)
    assert classify_comment(block, is_first=False) is CommentKind.DOC
