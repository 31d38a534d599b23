"""Unequal-probability estimation over sampled maximal patterns.

Each distinct sampled pattern i carries its single-walk selection
probability p_i and a statistic y_i.  Over m independent walks the
inclusion probability is pi_i = 1 - (1 - p_i)^m, and the estimator

    Y_hat = sum over distinct sampled i of  y_i / pi_i

is unbiased for the population total of y.  With y_i = 1 it estimates how
many maximal frequent patterns exist without enumerating them all.
"""

from __future__ import annotations

from typing import Sequence

from semclone.errors import ConfigError, InputError
from semclone.mining.lattice import Pattern


def ht_estimate(
    sampled: Sequence[tuple[Pattern, float, float]],
    num_walks: int,
) -> float:
    """Estimate the population total from (pattern, p_i, y_i) triples."""
    if num_walks < 1:
        raise ConfigError("num_walks must be >= 1")
    seen: set[str] = set()
    total = 0.0
    for pattern, p, y in sampled:
        if pattern.canonical_code in seen:
            raise InputError(
                f"duplicate pattern {pattern.pattern_id} in the sampled list"
            )
        seen.add(pattern.canonical_code)
        if not 0.0 < p <= 1.0:
            raise InputError(f"selection probability {p!r} must be in (0, 1]")
        inclusion = 1.0 - (1.0 - p) ** num_walks
        total += y / inclusion
    return total
