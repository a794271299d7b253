"""Isolability and Average Isolability (AVI) of graph partitions.

Isolability of a community is the share of the edges touching it that stay
inside it: ``intra / (intra + cut)``. AVI averages this over all ``k``
configured communities; empty or edge-free communities contribute 0.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .graph import Graph
from .partition import Partition


def isolability(g: Graph, community: Iterable[int]) -> float:
    members = np.zeros(g.node_count, dtype=bool)
    idx = np.fromiter(community, dtype=np.int64)
    if idx.size and (idx.min() < 0 or idx.max() >= g.node_count):
        raise ValueError("community contains a node id outside the graph")
    members[idx] = True
    inside_u = members[g.edges[:, 0]]
    inside_v = members[g.edges[:, 1]]
    intra = int(np.count_nonzero(inside_u & inside_v))
    cut = int(np.count_nonzero(inside_u ^ inside_v))
    if intra + cut == 0:
        return 0.0
    return intra / (intra + cut)


def community_isolability(g: Graph, labels: np.ndarray, k_max: int) -> np.ndarray:
    """Isolability of every community 1..k_max for a single label vector."""
    return _isolability_matrix(g, np.asarray(labels)[None, :], k_max)[0]


def avi(g: Graph, p: Partition) -> float:
    return float(community_isolability(g, p.labels, p.k_max).sum() / p.k_max)


def avi_batch(g: Graph, labels: np.ndarray, k_max: int) -> np.ndarray:
    """AVI for each row of a ``(pop, n)`` label matrix."""
    return _isolability_matrix(g, labels, k_max).sum(axis=1) / k_max


def _isolability_matrix(g: Graph, labels: np.ndarray, k_max: int) -> np.ndarray:
    labels = np.asarray(labels, dtype=np.int64) - 1
    pop = labels.shape[0]
    lu = labels[:, g.edges[:, 0]]
    lv = labels[:, g.edges[:, 1]]
    same = lu == lv
    # offset each row's labels so one bincount covers the whole population
    offset = (np.arange(pop, dtype=np.int64) * k_max)[:, None]
    size = pop * k_max
    intra = np.bincount((lu + offset)[same], minlength=size)
    cut = np.bincount((lu + offset)[~same], minlength=size)
    cut += np.bincount((lv + offset)[~same], minlength=size)
    total = intra + cut
    iso = np.divide(intra, total, out=np.zeros(size), where=total > 0)
    return iso.reshape(pop, k_max)
