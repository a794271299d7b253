"""Shared optimisation loop: initialise, evaluate, then update/clamp/evaluate.

Every algorithm keeps its own memory (leaders, flames or best agent) and
proposes new positions; the loop owns clamping, decoding, fitness evaluation
and elitist best-so-far tracking.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any

import numpy as np

from ..fitness import avi_batch
from ..graph import Graph
from ..partition import Partition, clamp, decode_labels
from .gwo import gwo_step
from .mfo import flame_count, mfo_step
from .rng import make_rng
from .sca import sca_step
from .woa import woa_step

ALGORITHMS = ("GWO", "MFO", "SCA", "WOA")


class ConfigurationError(ValueError):
    pass


@dataclass(frozen=True)
class AlgorithmParams:
    b: float = 1.0  # spiral shape, MFO and WOA
    a_initial: float = 2.0  # GWO and WOA, decays linearly to 0
    r1_initial: float = 2.0  # SCA, decays linearly to 0


@dataclass(frozen=True)
class OptimizerConfig:
    algorithm: str
    k_max: int
    population_size: int = 30
    max_iterations: int = 500
    seed: int = 0
    params: AlgorithmParams = field(default_factory=AlgorithmParams)

    def validate(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise ConfigurationError(f"unknown algorithm {self.algorithm!r}")
        if self.k_max < 1:
            raise ConfigurationError("k_max must be >= 1")
        if self.max_iterations < 1:
            raise ConfigurationError("max_iterations must be >= 1")
        minimum = 3 if self.algorithm == "GWO" else 1
        if self.population_size < minimum:
            raise ConfigurationError(f"{self.algorithm} needs population_size >= {minimum}")

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class RunResult:
    algorithm: str
    seed: int
    best_position: np.ndarray
    best_partition: Partition
    best_fitness: float
    trajectory: list[float]
    iterations_run: int

    def to_record(self, dataset: str) -> dict[str, Any]:
        return {
            "algorithm": self.algorithm,
            "dataset": dataset,
            "seed": self.seed,
            "k": self.best_partition.k_max,
            "best_fitness": self.best_fitness,
            "labels": self.best_partition.labels.tolist(),
            "trajectory": list(self.trajectory),
        }


def _top(positions: np.ndarray, fitness: np.ndarray, count: int) -> tuple[np.ndarray, np.ndarray]:
    order = np.argsort(-fitness, kind="stable")[:count]
    return positions[order].copy(), fitness[order].copy()


class _Strategy:
    def __init__(self, cfg: OptimizerConfig):
        self.cfg = cfg

    def schedule(self, t: int, start: float) -> float:
        return start * (1.0 - t / self.cfg.max_iterations)

    def observe(self, positions: np.ndarray, fitness: np.ndarray) -> None:
        raise NotImplementedError

    def propose(self, t: int, positions: np.ndarray, fitness: np.ndarray, rng) -> np.ndarray:
        raise NotImplementedError


class _GWO(_Strategy):
    leaders: np.ndarray
    leader_fitness: np.ndarray

    def observe(self, positions, fitness):
        if hasattr(self, "leaders"):
            positions = np.vstack([self.leaders, positions])
            fitness = np.concatenate([self.leader_fitness, fitness])
        self.leaders, self.leader_fitness = _top(positions, fitness, 3)

    def propose(self, t, positions, fitness, rng):
        return gwo_step(positions, self.leaders, self.schedule(t, self.cfg.params.a_initial), rng)


class _BestAgent(_Strategy):
    best: np.ndarray
    best_fitness: float = -np.inf

    def observe(self, positions, fitness):
        i = int(np.argmax(fitness))
        if fitness[i] > self.best_fitness:
            self.best, self.best_fitness = positions[i].copy(), float(fitness[i])


class _SCA(_BestAgent):
    def propose(self, t, positions, fitness, rng):
        return sca_step(positions, self.best, self.schedule(t, self.cfg.params.r1_initial), rng)


class _WOA(_BestAgent):
    def propose(self, t, positions, fitness, rng):
        a = self.schedule(t, self.cfg.params.a_initial)
        return woa_step(positions, self.best, a, self.cfg.params.b, rng)


class _MFO(_Strategy):
    flames: np.ndarray
    flame_fitness: np.ndarray

    def observe(self, positions, fitness):
        n = self.cfg.population_size
        if hasattr(self, "flames"):
            positions = np.vstack([self.flames, positions])
            fitness = np.concatenate([self.flame_fitness, fitness])
        self.flames, self.flame_fitness = _top(positions, fitness, n)

    def propose(self, t, positions, fitness, rng):
        cfg = self.cfg
        order = np.argsort(-fitness, kind="stable")
        count = flame_count(t, cfg.max_iterations, cfg.population_size)
        return mfo_step(positions[order], self.flames, count, cfg.params.b, rng)


_STRATEGIES = {"GWO": _GWO, "MFO": _MFO, "SCA": _SCA, "WOA": _WOA}


def optimize(g: Graph, cfg: OptimizerConfig) -> RunResult:
    """Run one seeded optimisation maximising AVI on ``g``.

    The result is a pure function of ``(g, cfg)``.
    """
    cfg.validate()
    if g.node_count == 0:
        raise ConfigurationError("cannot optimise over an empty graph")
    k = cfg.k_max
    rng = make_rng(cfg.seed)
    strategy = _STRATEGIES[cfg.algorithm](cfg)

    def evaluate(x: np.ndarray) -> np.ndarray:
        return avi_batch(g, decode_labels(x, k), k)

    positions = rng.uniform(1.0, float(k), size=(cfg.population_size, g.node_count))
    fitness = evaluate(positions)
    strategy.observe(positions, fitness)
    i = int(np.argmax(fitness))
    best_pos, best_fit = positions[i].copy(), float(fitness[i])

    trajectory: list[float] = []
    for t in range(1, cfg.max_iterations + 1):
        positions = clamp(strategy.propose(t, positions, fitness, rng), k)
        fitness = evaluate(positions)
        strategy.observe(positions, fitness)
        i = int(np.argmax(fitness))
        if fitness[i] > best_fit:
            best_pos, best_fit = positions[i].copy(), float(fitness[i])
        trajectory.append(best_fit)

    return RunResult(
        algorithm=cfg.algorithm,
        seed=cfg.seed,
        best_position=best_pos,
        best_partition=Partition(decode_labels(best_pos, k), k),
        best_fitness=best_fit,
        trajectory=trajectory,
        iterations_run=cfg.max_iterations,
    )
