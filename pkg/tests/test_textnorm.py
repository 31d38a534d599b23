from __future__ import annotations

import re

from hypothesis import given
from hypothesis import strategies as st

from semclone.corpus.textnorm import normalize, strip_markup
from semclone.stopwords import STOPWORDS


def test_strip_markup_removes_tags() -> None:
    assert strip_markup("<p>Draws a figure</p>") == "Draws a figure"


def test_strip_markup_replaces_entities_with_space() -> None:
    assert strip_markup("a &lt; b") == "a   b"


def test_strip_markup_identity_without_markup() -> None:
    assert strip_markup("no markup here") == "no markup here"


def test_strip_markup_tag_with_attributes() -> None:
    assert strip_markup('see <a href="x.html">link</a> text') == "see link text"


def test_strip_markup_unbalanced_open_drops_bracket_only() -> None:
    assert strip_markup("a < b") == "a  b"


def test_normalize_camel_case_and_stopwords() -> None:
    tokens = normalize("Creates the XMLParseException instance", STOPWORDS)
    assert tokens == ["creates", "xml", "parse", "exception", "instance"]


def test_normalize_drops_short_and_numeric() -> None:
    assert normalize("a I 42", STOPWORDS) == []


def test_normalize_splits_on_punctuation() -> None:
    assert normalize("error-handling code", STOPWORDS) == ["error", "handling", "code"]


def test_normalize_camel_split_can_be_disabled() -> None:
    tokens = normalize("XMLParseException", STOPWORDS, split_camel_case=False)
    assert tokens == ["xmlparseexception"]


def test_normalize_stemming_flag() -> None:
    assert normalize("figures classes bus", frozenset(), stem=True) == [
        "figure",
        "class",
        "bus",
    ]
    assert normalize("figures", frozenset(), stem=False) == ["figures"]


@given(st.text(max_size=200))
def test_normalize_tokens_are_clean(text: str) -> None:
    for token in normalize(text, STOPWORDS):
        assert re.fullmatch(r"[a-z0-9]{2,}", token)
        assert not token.isdigit()
        assert token not in STOPWORDS


@given(st.text(max_size=200))
def test_strip_markup_never_leaves_entities_or_tag_spans(text: str) -> None:
    stripped = strip_markup(text)
    assert "<" not in stripped
    assert not re.search(r"&[a-zA-Z][a-zA-Z0-9]*;", stripped)
