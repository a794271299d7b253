"""Sine Cosine Algorithm position update."""

from __future__ import annotations

import numpy as np


def sca_step(positions: np.ndarray, best: np.ndarray, r1: float, rng) -> np.ndarray:
    positions = np.asarray(positions, dtype=float)
    shape = positions.shape
    r2 = rng.uniform(0.0, 2.0 * np.pi, shape)
    r3 = rng.uniform(0.0, 2.0, shape)
    r4 = rng.random(shape)
    wave = np.where(r4 < 0.5, np.sin(r2), np.cos(r2))
    return positions + r1 * wave * np.abs(r3 * best - positions)
