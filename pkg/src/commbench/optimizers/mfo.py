"""Moth-Flame Optimization position update."""

from __future__ import annotations

import numpy as np


def flame_count(iteration: int, max_iterations: int, population_size: int) -> int:
    """Number of flames kept at ``iteration`` (1-based); shrinks from N to 1."""
    n = population_size
    return int(np.floor(n - iteration * (n - 1) / max_iterations + 0.5))


def mfo_step(moths: np.ndarray, flames: np.ndarray, n_flames: int, b: float, rng) -> np.ndarray:
    """Fly each moth along a logarithmic spiral around its flame.

    ``moths`` must be ordered best-first; the moth at rank ``i`` circles flame
    ``min(i, n_flames - 1)``. Returns the moved moths in the same order.
    """
    moths = np.asarray(moths, dtype=float)
    pop = moths.shape[0]
    pair = np.minimum(np.arange(pop), n_flames - 1)
    target = np.asarray(flames, dtype=float)[pair]
    distance = np.abs(target - moths)
    k = rng.uniform(-1.0, 1.0, moths.shape)
    return distance * np.exp(b * k) * np.cos(2.0 * np.pi * k) + target
