"""Continuous candidate vectors and their decoded community labelings.

A candidate is a real vector with one entry per node, each in ``[1, k]``.
Rounding an entry gives the node's community label.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np


def clamp(x: np.ndarray, k_max: int) -> np.ndarray:
    return np.clip(np.asarray(x, dtype=float), 1.0, float(k_max))


def round_half_away(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    return np.sign(x) * np.floor(np.abs(x) + 0.5)


def decode_labels(x: np.ndarray, k_max: int) -> np.ndarray:
    """Vectorised decode; works on a single vector or a population matrix."""
    return np.clip(round_half_away(x), 1, k_max).astype(np.int64)


@dataclass(frozen=True, eq=False)
class Partition:
    labels: np.ndarray
    k_max: int

    def __post_init__(self) -> None:
        labels = np.asarray(self.labels, dtype=np.int64)
        if labels.ndim != 1:
            raise ValueError("labels must be one-dimensional")
        if labels.size and (labels.min() < 1 or labels.max() > self.k_max):
            raise ValueError(f"labels must lie in 1..{self.k_max}")
        labels.setflags(write=False)
        object.__setattr__(self, "labels", labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.k_max == other.k_max and np.array_equal(self.labels, other.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def communities(self) -> list[set[int]]:
        return communities(self)

    def to_json(self) -> str:
        return json.dumps(self.labels.tolist())

    @classmethod
    def from_json(cls, text: str, k_max: int) -> Partition:
        return cls(np.array(json.loads(text), dtype=np.int64), k_max)


def decode(x: np.ndarray, k_max: int) -> Partition:
    return Partition(decode_labels(x, k_max), k_max)


def communities(p: Partition) -> list[set[int]]:
    """One node set per label 1..k_max, in label order; empty sets are kept."""
    groups: list[set[int]] = [set() for _ in range(p.k_max)]
    for node, label in enumerate(p.labels.tolist()):
        groups[label - 1].add(node)
    return groups


def random_position(n: int, k_max: int, rng: np.random.Generator) -> np.ndarray:
    if n < 1 or k_max < 1:
        raise ValueError("need n >= 1 and k_max >= 1")
    return rng.uniform(1.0, float(k_max), size=n)
