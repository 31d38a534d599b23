from __future__ import annotations

import random
from collections import Counter

import pytest

from graphs import asymmetric_db, chain_db, two_singletons_db
from semclone.config import MiningConfig
from semclone.errors import (
    ConfigError,
    InputError,
    NoFrequentPatternsError,
    ResourceBudgetError,
)
from semclone.mining.ht import ht_estimate
from semclone.mining.lattice import enumerate_lattice, extensions, selection_probabilities
from semclone.mining.walk import (
    LatticeWalker,
    derive_walk_seed,
    random_walk,
    sample_maximal,
)


def test_single_maximal_reached_for_every_seed() -> None:
    db = chain_db(copies=2)
    codes = {random_walk(db, 2, 19, seed).canonical_code for seed in range(20)}
    assert len(codes) == 1


def test_walk_is_deterministic() -> None:
    db = asymmetric_db()
    first = random_walk(db, 2, 19, seed=12345)
    second = random_walk(db, 2, 19, seed=12345)
    assert first.canonical_code == second.canonical_code


def test_walk_raises_when_nothing_is_frequent() -> None:
    db = chain_db(copies=2)
    with pytest.raises(NoFrequentPatternsError):
        random_walk(db, min_support=99, max_edges=19, seed=1)


def test_symmetric_two_maximal_split_is_even() -> None:
    db = two_singletons_db()
    walker = LatticeWalker(db, min_support=2, max_edges=19)
    walks = 10000
    counts = Counter(
        walker.walk(derive_walk_seed(42, index)).canonical_code
        for index in range(walks)
    )
    a, b = counts.most_common(2)
    assert abs(a[1] / walks - 0.5) <= 0.03
    assert abs(b[1] / walks - 0.5) <= 0.03


def test_walk_results_are_frequent_and_maximal() -> None:
    db = asymmetric_db()
    walker = LatticeWalker(db, min_support=2, max_edges=19)
    for index in range(25):
        pattern = walker.walk(derive_walk_seed(9, index))
        assert pattern.is_maximal
        assert pattern.support >= 2
        assert extensions(pattern, db, min_support=2) == []


def test_sample_maximal_dedupes_and_orders_by_first_encounter() -> None:
    db = two_singletons_db()
    config = MiningConfig(min_support=2, sample_size=100, min_vertices=1, max_edges=19)
    patterns = sample_maximal(db, config, seed=100)
    assert len(patterns) == 2
    first_seed_pattern = LatticeWalker(db, 2, 19).walk(derive_walk_seed(100, 0))
    assert patterns[0].canonical_code == first_seed_pattern.canonical_code


def test_sample_maximal_single_walk() -> None:
    db = chain_db(copies=2)
    config = MiningConfig(min_support=2, sample_size=1, min_vertices=1, max_edges=19)
    assert len(sample_maximal(db, config, seed=100)) == 1


def test_sample_maximal_empty_database() -> None:
    db = chain_db(copies=2)
    config = MiningConfig(min_support=99, sample_size=10, min_vertices=1, max_edges=19)
    assert sample_maximal(db, config, seed=100) == []


def test_sample_maximal_min_vertices_filter() -> None:
    db = two_singletons_db()  # maximal patterns have 2 vertices
    config = MiningConfig(min_support=2, sample_size=20, min_vertices=3, max_edges=19)
    assert sample_maximal(db, config, seed=100) == []


def test_sample_maximal_attaches_probabilities() -> None:
    db = asymmetric_db()
    config = MiningConfig(
        min_support=2, sample_size=50, min_vertices=1, max_edges=19, with_probability=True
    )
    patterns = sample_maximal(db, config, seed=100)
    assert {round(p.selection_probability, 6) for p in patterns} == {
        round(1 / 3, 6),
        round(2 / 3, 6),
    }


def test_sample_maximal_budget_error_recommends_disabling() -> None:
    db = asymmetric_db()
    config = MiningConfig(
        min_support=2,
        sample_size=5,
        min_vertices=1,
        max_edges=19,
        with_probability=True,
        node_budget=1,
    )
    with pytest.raises(ResourceBudgetError, match="with_probability"):
        sample_maximal(db, config, seed=100)


def test_derived_seeds_are_stable() -> None:
    assert derive_walk_seed(100, 0) == derive_walk_seed(100, 0)
    assert derive_walk_seed(100, 0) != derive_walk_seed(100, 1)
    assert derive_walk_seed(100, 0) != derive_walk_seed(101, 0)


# --- Horvitz-Thompson ---------------------------------------------------------


def test_ht_certainty_case() -> None:
    db = chain_db(copies=2)
    lattice = enumerate_lattice(db, 2, 19)
    (code,) = lattice.maximal_codes
    pattern = lattice.nodes[code]
    assert ht_estimate([(pattern, 1.0, 1.0)], num_walks=1) == 1.0


def test_ht_two_halves_one_sampled() -> None:
    db = two_singletons_db()
    lattice = enumerate_lattice(db, 2, 19)
    pattern = lattice.nodes[lattice.maximal_codes[0]]
    assert ht_estimate([(pattern, 0.5, 1.0)], num_walks=1) == pytest.approx(2.0)


def test_ht_rejects_bad_probabilities_and_duplicates() -> None:
    db = chain_db(copies=2)
    lattice = enumerate_lattice(db, 2, 19)
    pattern = lattice.nodes[lattice.maximal_codes[0]]
    with pytest.raises(InputError):
        ht_estimate([(pattern, 0.0, 1.0)], num_walks=5)
    with pytest.raises(InputError):
        ht_estimate([(pattern, 0.5, 1.0), (pattern, 0.5, 1.0)], num_walks=5)
    with pytest.raises(ConfigError):
        ht_estimate([(pattern, 0.5, 1.0)], num_walks=0)


def test_ht_mean_tracks_true_count() -> None:
    db = asymmetric_db()
    lattice = enumerate_lattice(db, 2, 19)
    probs = selection_probabilities(lattice)
    true_count = len(lattice.maximal_codes)
    walker = LatticeWalker(db, 2, 19)
    rng = random.Random(17)
    estimates = []
    for _ in range(120):
        seen = {}
        for _ in range(12):
            pattern = walker.walk(rng.randrange(2**60))
            seen[pattern.canonical_code] = pattern
        sampled = [
            (pattern, probs[code], 1.0) for code, pattern in seen.items()
        ]
        estimates.append(ht_estimate(sampled, num_walks=12))
    mean = sum(estimates) / len(estimates)
    assert abs(mean - true_count) / true_count < 0.05
