"""Grey Wolf Optimizer position update."""

from __future__ import annotations

import numpy as np


def gwo_step(positions: np.ndarray, leaders: np.ndarray, a: float, rng) -> np.ndarray:
    """Move every wolf toward the alpha, beta and delta leaders.

    For each leader ``L`` (in alpha, beta, delta order) two per-dimension
    draws give ``A = 2a*r1 - a`` and ``C = 2*r2``; the wolf's candidate is
    ``L - A*|C*L - X|``. The new position is the mean of the three candidates.
    """
    positions = np.asarray(positions, dtype=float)
    shape = positions.shape
    total = np.zeros(shape)
    for leader in leaders[:3]:
        A = 2.0 * a * rng.random(shape) - a
        C = 2.0 * rng.random(shape)
        D = np.abs(C * leader - positions)
        total += leader - A * D
    return total / 3.0
