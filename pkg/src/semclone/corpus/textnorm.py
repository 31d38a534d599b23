"""Markup stripping and token normalization for comment text."""

from __future__ import annotations

import re

_ENTITY = re.compile(r"&[a-zA-Z][a-zA-Z0-9]*;|&#[0-9]+;")
_NON_ALNUM = re.compile(r"[^0-9A-Za-z]+")
_CAMEL_BOUNDARY = re.compile(r"(?<=[a-z0-9])(?=[A-Z])|(?<=[A-Z])(?=[A-Z][a-z])")


def strip_markup(text: str) -> str:
    """Remove ``<...>`` tag spans and replace HTML entities with a space.

    Inner text is preserved.  A ``<`` with no closing ``>`` before the end
    of the text is dropped on its own and the remainder kept.
    """
    out: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "<":
            close = text.find(">", i + 1)
            if close == -1:
                i += 1  # drop the lone '<'
                continue
            i = close + 1
            continue
        out.append(ch)
        i += 1
    return _ENTITY.sub(" ", "".join(out))


def normalize(
    text: str,
    stopwords: frozenset[str],
    *,
    split_camel_case: bool = True,
    stem: bool = False,
) -> list[str]:
    """Turn raw comment text into normalized word tokens.

    Splits on any non-alphanumeric character (and, by default, at camelCase
    boundaries so embedded identifiers contribute their parts), lowercases,
    and drops stopwords, purely numeric tokens, and tokens shorter than two
    characters.  Order is preserved.
    """
    tokens: list[str] = []
    for raw in _NON_ALNUM.split(text):
        if not raw:
            continue
        parts = _CAMEL_BOUNDARY.split(raw) if split_camel_case else [raw]
        for part in parts:
            token = part.lower()
            if stem:
                token = _light_stem(token)
            if len(token) < 2 or token.isdigit() or token in stopwords:
                continue
            tokens.append(token)
    return tokens


def _light_stem(token: str) -> str:
    # Conservative plural stripping only; anything heavier belongs in a
    # dedicated stemmer and would change published token streams.
    if len(token) > 4 and token.endswith("sses"):
        return token[:-2]
    if len(token) > 4 and token.endswith("ies"):
        return token[:-3] + "y"
    if token.endswith(("ss", "us", "is")):
        return token
    if len(token) > 3 and token.endswith("s"):
        return token[:-1]
    return token
