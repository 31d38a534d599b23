from __future__ import annotations

from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def factorial_dir() -> Path:
    return FIXTURES / "factorial"


@pytest.fixture
def hybrid_corpus_dir() -> Path:
    return FIXTURES / "hybrid_corpus"
