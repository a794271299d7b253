"""Simple undirected, unweighted graphs and the bundled benchmark networks."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, TextIO

import numpy as np

DATASETS = ("karate", "dolphin", "football")


class GraphError(ValueError):
    """Base class for graph construction problems."""


class EdgeListParseError(GraphError):
    def __init__(self, lineno: int, line: str, reason: str = "expected two node tokens"):
        super().__init__(f"line {lineno}: {reason}: {line!r}")
        self.lineno = lineno


class GraphValidationError(GraphError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph on nodes ``0..node_count-1``.

    ``edges`` is an ``(m, 2)`` int array with ``u < v`` in every row; ``labels``
    maps internal ids back to the tokens they were loaded from.
    """

    node_count: int
    edges: np.ndarray
    labels: tuple[str, ...] = field(default=())
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        edges = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        if edges.size and (edges.min() < 0 or edges.max() >= self.node_count):
            raise GraphValidationError("edge endpoint outside 0..node_count-1")
        if np.any(edges[:, 0] == edges[:, 1]):
            raise GraphValidationError("self-loop")
        edges = np.sort(edges, axis=1)
        if len(np.unique(edges, axis=0)) != len(edges):
            raise GraphValidationError("duplicate edge")
        edges.setflags(write=False)
        adj: list[list[int]] = [[] for _ in range(self.node_count)]
        for u, v in edges.tolist():
            adj[u].append(v)
            adj[v].append(u)
        labels = self.labels or tuple(str(i) for i in range(self.node_count))
        if len(labels) != self.node_count:
            raise GraphValidationError("label table length differs from node_count")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "labels", tuple(labels))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return cls(node_count, np.array(list(edges), dtype=np.int64).reshape(-1, 2))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> np.ndarray:
        return np.bincount(self.edges.ravel(), minlength=self.node_count)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def edge_set(self) -> set[tuple[int, int]]:
        return {(u, v) for u, v in self.edges.tolist()}

    def __repr__(self) -> str:
        return f"Graph(n={self.node_count}, m={self.edge_count})"


def load_edge_list(text: str | TextIO) -> Graph:
    """Parse a whitespace-separated edge list.

    Lines starting with ``#`` or ``%`` and blank lines are skipped. Tokens are
    remapped to dense ids in order of first appearance.
    """
    if not isinstance(text, str):
        text = text.read()
    ids: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(lineno, raw)
        a, b = tokens
        if a == b:
            raise GraphValidationError(f"line {lineno}: self-loop on node {a!r}")
        u = ids.setdefault(a, len(ids))
        v = ids.setdefault(b, len(ids))
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphValidationError(f"line {lineno}: duplicate edge {a!r}-{b!r}")
        seen.add(key)
        edges.append(key)
    return Graph(len(ids), np.array(edges, dtype=np.int64).reshape(-1, 2), tuple(ids))


def average_degree(g: Graph) -> float:
    if g.node_count == 0:
        raise ValueError("average degree of an empty graph is undefined")
    return 2.0 * g.edge_count / g.node_count


_cache: dict[str, Graph] = {}


def builtin_dataset(name: str) -> Graph:
    """Return one of the bundled networks: ``karate``, ``dolphin`` or ``football``."""
    if name not in DATASETS:
        raise KeyError(f"unknown dataset {name!r}; choose from {', '.join(DATASETS)}")
    if name not in _cache:
        text = resources.files("commbench.data").joinpath(f"{name}.txt").read_text("utf-8")
        _cache[name] = load_edge_list(text)
    return _cache[name]
