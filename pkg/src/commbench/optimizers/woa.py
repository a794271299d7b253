"""Whale Optimization Algorithm position update."""

from __future__ import annotations

import numpy as np


def woa_step(positions: np.ndarray, best: np.ndarray, a: float, b: float, rng) -> np.ndarray:
    """One WOA move for the whole pod.

    Per agent a coin ``p`` picks the bubble-net spiral (``p >= 0.5``) or an
    encircling move. Encircling uses the best whale where ``|A| < 1`` and a
    randomly chosen whale elsewhere (per dimension). Draw order: ``p``, the
    ``A`` and ``C`` uniforms, spiral ``l``, then the random-whale indices.
    """
    positions = np.asarray(positions, dtype=float)
    pop, n = positions.shape
    p = rng.random(pop)
    A = 2.0 * a * rng.random((pop, n)) - a
    C = 2.0 * rng.random((pop, n))
    l = rng.uniform(-1.0, 1.0, (pop, n))
    other = rng.integers(0, pop, size=pop)

    target = np.where(np.abs(A) < 1.0, best, positions[other])
    D = np.abs(C * target - positions)
    encircle = np.abs(target - A * D)

    spiral = np.abs(best - positions) * np.exp(b * l) * np.cos(2.0 * np.pi * l) + best
    return np.where((p >= 0.5)[:, None], spiral, encircle)
