"""Run configuration: validated parameter bundles plus TOML/JSON loading.

Every pipeline artifact embeds the hash of the fully resolved configuration
and the master seed, so two runs can be compared byte for byte.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path
from typing import Any, Mapping

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib  # type: ignore[no-redef]

from semclone.errors import ConfigError
from semclone.stopwords import STOPWORDS


class Language(Enum):
    JAVA_LIKE = "java"
    PYTHON_LIKE = "python"


DEFAULT_EXTENSION_MAP: dict[str, Language] = {
    ".java": Language.JAVA_LIKE,
    ".py": Language.PYTHON_LIKE,
    ".mini": Language.JAVA_LIKE,
}

DEFAULT_COPYRIGHT_KEYWORDS: frozenset[str] = frozenset(
    {"copyright", "license", "licence", "all rights reserved"}
)

DEFAULT_TASK_MARKERS: frozenset[str] = frozenset({"TODO", "FIXME", "XXX"})

DEFAULT_SEED = 100


@dataclass(frozen=True)
class CorpusConfig:
    extension_map: Mapping[str, Language] = field(
        default_factory=lambda: dict(DEFAULT_EXTENSION_MAP)
    )
    stopwords: frozenset[str] = STOPWORDS
    split_camel_case: bool = True
    stem: bool = False
    copyright_keywords: frozenset[str] = DEFAULT_COPYRIGHT_KEYWORDS
    task_markers: frozenset[str] = DEFAULT_TASK_MARKERS

    def __post_init__(self) -> None:
        for ext in self.extension_map:
            if not ext.startswith("."):
                raise ConfigError(f"extension {ext!r} must start with a dot")
        for word in self.stopwords:
            if word != word.lower():
                raise ConfigError(f"stopword {word!r} must be lowercase")


@dataclass(frozen=True)
class LdaConfig:
    num_topics: int = 100
    alpha: float | None = None  # None resolves to 50 / num_topics
    beta: float = 0.01
    passes: int = 50
    iterations: int = 1000

    def __post_init__(self) -> None:
        if self.num_topics < 1:
            raise ConfigError("num_topics must be >= 1")
        if self.alpha is not None and self.alpha <= 0:
            raise ConfigError("alpha must be > 0")
        if self.beta <= 0:
            raise ConfigError("beta must be > 0")
        if self.passes < 1 or self.iterations < 1:
            raise ConfigError("passes and iterations must be >= 1")

    @property
    def resolved_alpha(self) -> float:
        return self.alpha if self.alpha is not None else 50.0 / self.num_topics


@dataclass(frozen=True)
class MiningConfig:
    min_support: int = 5
    sample_size: int = 100
    min_vertices: int = 8
    max_edges: int = 19
    with_probability: bool = False
    node_budget: int = 20000
    support_mode: str = "embeddings"  # or "files"

    def __post_init__(self) -> None:
        for name in ("min_support", "sample_size", "min_vertices", "max_edges", "node_budget"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be >= 1")
        if self.support_mode not in ("embeddings", "files"):
            raise ConfigError("support_mode must be 'embeddings' or 'files'")


@dataclass(frozen=True)
class HybridConfig:
    mode: str = "lda-members"  # or "superset"
    similarity_threshold: int = 1
    veg_path: str | None = None  # when set, stage 2 filters this database

    def __post_init__(self) -> None:
        if self.mode not in ("lda-members", "superset"):
            raise ConfigError("hybrid mode must be 'lda-members' or 'superset'")
        if self.similarity_threshold < 1:
            raise ConfigError("similarity_threshold must be >= 1")


@dataclass(frozen=True)
class RunConfig:
    corpus: CorpusConfig = field(default_factory=CorpusConfig)
    lda: LdaConfig = field(default_factory=LdaConfig)
    mining: MiningConfig = field(default_factory=MiningConfig)
    hybrid: HybridConfig = field(default_factory=HybridConfig)
    seed: int = DEFAULT_SEED

    def with_seed(self, seed: int) -> RunConfig:
        return replace(self, seed=seed)


def _corpus_from_dict(data: Mapping[str, Any]) -> CorpusConfig:
    base = CorpusConfig()
    ext_map = dict(base.extension_map)
    if "extension_map" in data:
        ext_map = {}
        for ext, lang in data["extension_map"].items():
            try:
                ext_map[ext] = Language(lang)
            except ValueError:
                raise ConfigError(
                    f"unknown language {lang!r} for extension {ext!r}"
                ) from None
    stopwords = set(base.stopwords)
    stopwords.update(w.lower() for w in data.get("extra_stopwords", ()))
    stopwords.difference_update(w.lower() for w in data.get("drop_stopwords", ()))
    return CorpusConfig(
        extension_map=ext_map,
        stopwords=frozenset(stopwords),
        split_camel_case=data.get("split_camel_case", base.split_camel_case),
        stem=data.get("stem", base.stem),
        copyright_keywords=frozenset(
            k.lower() for k in data.get("copyright_keywords", base.copyright_keywords)
        ),
        task_markers=frozenset(data.get("task_markers", base.task_markers)),
    )


def _section(data: Mapping[str, Any], key: str) -> Mapping[str, Any]:
    value = data.get(key, {})
    if not isinstance(value, Mapping):
        raise ConfigError(f"config section {key!r} must be a table/object")
    return value


def config_from_dict(data: Mapping[str, Any]) -> RunConfig:
    known = {"corpus", "lda", "mining", "hybrid", "seed"}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    lda_kwargs = dict(_section(data, "lda"))
    mining_kwargs = dict(_section(data, "mining"))
    hybrid_kwargs = dict(_section(data, "hybrid"))
    try:
        return RunConfig(
            corpus=_corpus_from_dict(_section(data, "corpus")),
            lda=LdaConfig(**lda_kwargs),
            mining=MiningConfig(**mining_kwargs),
            hybrid=HybridConfig(**hybrid_kwargs),
            seed=int(data.get("seed", DEFAULT_SEED)),
        )
    except TypeError as exc:
        raise ConfigError(str(exc)) from None


def load_config(path: str | Path) -> RunConfig:
    """Load a RunConfig from a .toml or .json file."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    raw = path.read_bytes()
    if path.suffix.lower() == ".toml":
        try:
            data = tomllib.loads(raw.decode("utf-8"))
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"invalid TOML in {path}: {exc}") from None
    elif path.suffix.lower() == ".json":
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON in {path}: {exc}") from None
    else:
        raise ConfigError(f"config must be .toml or .json, got {path.suffix!r}")
    return config_from_dict(data)


def config_to_dict(config: RunConfig) -> dict[str, Any]:
    """Fully resolved, JSON-serializable view of the configuration."""
    return {
        "corpus": {
            "extension_map": {
                ext: lang.value for ext, lang in sorted(config.corpus.extension_map.items())
            },
            "stopwords": sorted(config.corpus.stopwords),
            "split_camel_case": config.corpus.split_camel_case,
            "stem": config.corpus.stem,
            "copyright_keywords": sorted(config.corpus.copyright_keywords),
            "task_markers": sorted(config.corpus.task_markers),
        },
        "lda": {
            "num_topics": config.lda.num_topics,
            "alpha": config.lda.resolved_alpha,
            "beta": config.lda.beta,
            "passes": config.lda.passes,
            "iterations": config.lda.iterations,
        },
        "mining": {
            "min_support": config.mining.min_support,
            "sample_size": config.mining.sample_size,
            "min_vertices": config.mining.min_vertices,
            "max_edges": config.mining.max_edges,
            "with_probability": config.mining.with_probability,
            "node_budget": config.mining.node_budget,
            "support_mode": config.mining.support_mode,
        },
        "hybrid": {
            "mode": config.hybrid.mode,
            "similarity_threshold": config.hybrid.similarity_threshold,
            "veg_path": config.hybrid.veg_path,
        },
        "seed": config.seed,
    }


def config_hash(config: RunConfig) -> str:
    canonical = json.dumps(config_to_dict(config), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
