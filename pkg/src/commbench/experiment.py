"""Experiment batches: seeded runs on disk, score tables and report files.

Store layout::

    <store>/manifest.json              config, config hash, record list
    <store>/timestamps.json            wall-clock start/finish (not compared)
    <store>/runs/<dataset>/<ALG>/seed_<n>.json
    <store>/summary.csv
    <store>/scores_<ALG>.csv, averages_<ALG>.csv      (compare)
    <store>/report/*.csv, report.md                   (report)
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Iterator

import numpy as np

from . import reference
from .comparison import (
    AVERAGE_FIELDS,
    SCORE_FIELDS,
    AveragedScores,
    ScoreSet,
    average_scores,
    rank,
    score_pair,
)
from .graph import DATASETS, average_degree, builtin_dataset
from .optimizers import ALGORITHMS, AlgorithmParams, ConfigurationError, OptimizerConfig, optimize

log = logging.getLogger(__name__)

DEFAULT_K = {"karate": 2, "dolphin": 2, "football": 12}


class StoreError(RuntimeError):
    pass


@dataclass
class ExperimentConfig:
    datasets: list[str] = field(default_factory=lambda: list(DATASETS))
    algorithms: list[str] = field(default_factory=lambda: list(ALGORITHMS))
    runs_per_pair: int = 30
    population_size: int = 30
    max_iterations: int = 500
    k: dict[str, int] = field(default_factory=dict)
    base_seed: int = 0
    epsilon: float = 1e-6
    pool: str = "both"
    algorithm_params: dict[str, float] = field(default_factory=dict)
    output_dir: str = "results"

    def __post_init__(self) -> None:
        self.k = {**{d: DEFAULT_K[d] for d in self.datasets if d in DEFAULT_K}, **self.k}
        self.algorithm_params = {**asdict(AlgorithmParams()), **self.algorithm_params}
        self.validate()

    def validate(self) -> None:
        for d in self.datasets:
            if d not in DATASETS:
                raise ConfigurationError(f"unknown dataset {d!r}")
        for a in self.algorithms:
            if a not in ALGORITHMS:
                raise ConfigurationError(f"unknown algorithm {a!r}")
        if not self.datasets or not self.algorithms:
            raise ConfigurationError("need at least one dataset and one algorithm")
        if self.runs_per_pair < 1:
            raise ConfigurationError("runs_per_pair must be >= 1")
        if self.pool not in ("both", "primary"):
            raise ConfigurationError("pool must be 'both' or 'primary'")
        if self.epsilon < 0:
            raise ConfigurationError("epsilon must be non-negative")
        unknown = set(self.algorithm_params) - {f.name for f in fields(AlgorithmParams)}
        if unknown:
            raise ConfigurationError(f"unknown algorithm_params {sorted(unknown)}")
        for d in self.datasets:
            self.optimizer_config(d, self.algorithms[0], 0).validate()
        for a in self.algorithms:
            self.optimizer_config(self.datasets[0], a, 0).validate()

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ExperimentConfig:
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigurationError(f"unknown config keys {sorted(unknown)}")
        try:
            return cls(**data)
        except TypeError as exc:
            raise ConfigurationError(str(exc)) from exc

    @classmethod
    def load(cls, path: str | os.PathLike) -> ExperimentConfig:
        try:
            data = json.loads(Path(path).read_text("utf-8"))
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"{path}: invalid JSON ({exc})") from exc
        if not isinstance(data, dict):
            raise ConfigurationError(f"{path}: config must be a JSON object")
        return cls.from_dict(data)

    def seeds(self) -> list[int]:
        return [self.base_seed + i for i in range(self.runs_per_pair)]

    def optimizer_config(self, dataset: str, algorithm: str, seed: int) -> OptimizerConfig:
        return OptimizerConfig(
            algorithm=algorithm,
            k_max=int(self.k[dataset]),
            population_size=self.population_size,
            max_iterations=self.max_iterations,
            seed=seed,
            params=AlgorithmParams(**self.algorithm_params),
        )

    def stored_dict(self) -> dict[str, Any]:
        """Config as persisted in the manifest; the output location is not part of it."""
        data = asdict(self)
        data.pop("output_dir")
        return data

    def hash(self) -> str:
        canonical = json.dumps(self.stored_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode()).hexdigest()


def record_path(store: Path, dataset: str, algorithm: str, seed: int) -> Path:
    return store / "runs" / dataset / algorithm / f"seed_{seed}.json"


def _fmt(x: float) -> str:
    return f"{round(float(x), 4) + 0.0:.4f}"


def _write_csv(path: Path, header: list[str], rows: list[list[Any]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    path.write_text(buf.getvalue(), "utf-8")


def _dump_json(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _execute(job: tuple[ExperimentConfig, str, str, int]) -> dict[str, Any]:
    cfg, dataset, algorithm, seed = job
    result = optimize(builtin_dataset(dataset), cfg.optimizer_config(dataset, algorithm, seed))
    return result.to_record(dataset)


def worker_count(requested: int | None = None) -> int:
    """Requested workers (default: CPU count), capped by ``BENCH_THREADS``."""
    n = requested or os.cpu_count() or 1
    cap = os.environ.get("BENCH_THREADS")
    if cap:
        try:
            n = min(n, int(cap))
        except ValueError:
            raise ConfigurationError(f"BENCH_THREADS must be an integer, got {cap!r}") from None
    return max(1, n)


def cmd_run(cfg: ExperimentConfig, store: str | os.PathLike | None = None, workers: int | None = None) -> Path:
    """Execute every (dataset, algorithm, seed) run and persist the records."""
    out = Path(store if store is not None else cfg.output_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        probe = out / ".write-test"
        probe.write_text("")
        probe.unlink()
    except OSError as exc:
        raise OSError(f"output directory {out} is not writable: {exc}") from exc

    started = datetime.now(timezone.utc).isoformat()
    jobs = [(cfg, d, a, s) for d in cfg.datasets for a in cfg.algorithms for s in cfg.seeds()]
    workers = worker_count(workers)
    log.info("running %d jobs on %d worker(s)", len(jobs), workers)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_execute, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        records = [_execute(job) for job in jobs]

    paths = []
    for rec in records:
        path = record_path(out, rec["dataset"], rec["algorithm"], rec["seed"])
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(_dump_json(rec), "utf-8")
        paths.append(path.relative_to(out).as_posix())

    manifest = {"config": cfg.stored_dict(), "config_hash": cfg.hash(), "records": paths}
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n", "utf-8")
    finished = datetime.now(timezone.utc).isoformat()
    (out / "timestamps.json").write_text(json.dumps({"started": started, "finished": finished}) + "\n")
    write_summary(out, cfg, records)
    return out


def summarize(cfg: ExperimentConfig, records: list[dict[str, Any]]) -> list[list[Any]]:
    rows = []
    for d in cfg.datasets:
        per_alg = []
        for a in cfg.algorithms:
            vals = [r["best_fitness"] for r in records if r["dataset"] == d and r["algorithm"] == a]
            if vals:
                per_alg.append((a, float(np.mean(vals)), max(vals), min(vals), len(vals)))
        per_alg.sort(key=lambda t: (-t[1], t[0]))
        rows += [[d, a, n, _fmt(mean), _fmt(best), _fmt(worst)] for a, mean, best, worst, n in per_alg]
    return rows


def write_summary(out: Path, cfg: ExperimentConfig, records: list[dict[str, Any]]) -> None:
    header = ["dataset", "algorithm", "runs", "mean_avi", "best_avi", "worst_avi"]
    _write_csv(out / "summary.csv", header, summarize(cfg, records))


class ResultStore:
    """Read access to a directory written by :func:`cmd_run`."""

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        manifest_path = self.path / "manifest.json"
        if not manifest_path.is_file():
            raise StoreError(f"{self.path} has no manifest.json; run `bench run` first")
        self.manifest = json.loads(manifest_path.read_text("utf-8"))
        self.config = ExperimentConfig.from_dict(self.manifest["config"])
        if self.config.hash() != self.manifest.get("config_hash"):
            raise StoreError(f"{manifest_path}: config hash does not match stored config")
        if not self.manifest.get("records"):
            raise StoreError(f"{self.path} contains no run records")

    def record(self, dataset: str, algorithm: str, seed: int) -> dict[str, Any]:
        path = record_path(self.path, dataset, algorithm, seed)
        if not path.is_file():
            raise StoreError(f"missing run record for dataset={dataset} algorithm={algorithm} seed={seed}")
        return json.loads(path.read_text("utf-8"))

    def records(self) -> Iterator[dict[str, Any]]:
        for rel in self.manifest["records"]:
            yield json.loads((self.path / rel).read_text("utf-8"))

    def fitnesses(self, dataset: str, algorithm: str) -> list[float]:
        return [self.record(dataset, algorithm, s)["best_fitness"] for s in self.config.seeds()]


def compare(store: ResultStore, primary: str, epsilon: float | None = None, pool: str | None = None
            ) -> tuple[list[ScoreSet], list[AveragedScores]]:
    cfg = store.config
    if primary not in ALGORITHMS:
        raise ConfigurationError(f"unknown algorithm {primary!r}")
    if primary not in cfg.algorithms:
        raise StoreError(f"store has no runs for primary algorithm {primary}")
    alternatives = [a for a in cfg.algorithms if a != primary]
    if not alternatives:
        raise StoreError(f"no alternative algorithms to compare {primary} against")
    eps = cfg.epsilon if epsilon is None else epsilon
    mode = pool or cfg.pool
    scores: list[ScoreSet] = []
    averages: list[AveragedScores] = []
    for d in cfg.datasets:
        runs_p = store.fitnesses(d, primary)
        rows = [score_pair(primary, q, d, runs_p, store.fitnesses(d, q), eps, mode) for q in alternatives]
        scores += rows
        averages.append(average_scores(rows))
    return scores, averages


def cmd_compare(store_path: str | os.PathLike, primary: str, epsilon: float | None = None,
                pool: str | None = None) -> tuple[Path, Path]:
    store = ResultStore(store_path)
    scores, averages = compare(store, primary, epsilon, pool)
    score_file = store.path / f"scores_{primary}.csv"
    avg_file = store.path / f"averages_{primary}.csv"
    _write_csv(score_file, ["dataset", "primary", "alternative", *SCORE_FIELDS],
               [[s.dataset, s.primary, s.alternative, *map(_fmt, s.values())] for s in scores])
    _write_csv(avg_file, ["dataset", "primary", *AVERAGE_FIELDS],
               [[a.dataset, a.primary, *map(_fmt, a.values())] for a in averages])
    return score_file, avg_file


def cmd_report(store_path: str | os.PathLike) -> Path:
    store = ResultStore(store_path)
    cfg = store.config
    out = store.path / "report"
    out.mkdir(exist_ok=True)

    stats = []
    for d in cfg.datasets:
        g = builtin_dataset(d)
        stats.append([d, g.node_count, g.edge_count, f"{average_degree(g):.2f}"])
    _write_csv(out / "dataset_stats.csv", ["dataset", "nodes", "edges", "avg_degree"], stats)

    mean_avi = {d: {a: float(np.mean(store.fitnesses(d, a))) for a in cfg.algorithms} for d in cfg.datasets}
    _write_csv(out / "avi_chart.csv", ["dataset", "algorithm", "mean_avi"],
               [[d, a, _fmt(mean_avi[d][a])] for d in cfg.datasets for a in cfg.algorithms])

    averaged: dict[str, dict[str, AveragedScores]] = {d: {} for d in cfg.datasets}
    if len(cfg.algorithms) > 1:
        for a in cfg.algorithms:
            for avg in compare(store, a)[1]:
                averaged[avg.dataset][a] = avg
    _write_csv(out / "averaged_scores.csv", ["dataset", "primary", *AVERAGE_FIELDS],
               [[d, a, *map(_fmt, averaged[d][a].values())] for d in cfg.datasets for a in averaged[d]])

    rank_rows = []
    for d in cfg.datasets:
        measures: dict[str, dict[str, float]] = {"mean_avi": mean_avi[d]}
        for i, name in enumerate(AVERAGE_FIELDS):
            if averaged[d]:
                measures[name] = {a: s.values()[i] for a, s in averaged[d].items()}
        for name, values in measures.items():
            # rank on the rounded values that appear in the tables
            rounded = {a: round(v, 4) for a, v in values.items()}
            rank_rows += [[d, name, a, _fmt(values[a]), r] for a, r in rank(rounded)]
    _write_csv(out / "ranks.csv", ["dataset", "measure", "algorithm", "value", "rank"], rank_rows)

    (out / "report.md").write_text(_markdown(cfg, stats, mean_avi, averaged), "utf-8")
    return out


def _markdown(cfg, stats, mean_avi, averaged) -> str:
    lines = ["# Benchmark report", "", f"config hash `{cfg.hash()}`; "
             f"{cfg.runs_per_pair} runs per pair, population {cfg.population_size}, "
             f"{cfg.max_iterations} iterations, K = {json.dumps(cfg.k, sort_keys=True)}", ""]
    lines += ["## Datasets", "", "| dataset | nodes | edges | avg degree | reported |", "|---|---|---|---|---|"]
    for d, n, m, deg in stats:
        ref = reference.DATASET_STATS.get(d)
        lines.append(f"| {d} | {n} | {m} | {deg} | {ref[0]} / {ref[1]} / {ref[2]} |")
    lines += ["", "## Mean AVI (measured vs reported)", "", "| dataset | algorithm | mean AVI | reported |",
              "|---|---|---|---|"]
    for d in cfg.datasets:
        for a in cfg.algorithms:
            ref = reference.MEAN_AVI.get(d, {}).get(a)
            lines.append(f"| {d} | {a} | {_fmt(mean_avi[d][a])} | {'' if ref is None else f'{ref:.4f}'} |")
    if any(averaged.values()):
        lines += ["", "## Averaged D/K scores (measured vs reported)", "",
                  "| dataset | primary | " + " | ".join(AVERAGE_FIELDS) + " | reported |",
                  "|---|---|" + "---|" * (len(AVERAGE_FIELDS) + 1)]
        for d in cfg.datasets:
            for a, avg in averaged[d].items():
                ref = reference.AVERAGED.get(d, {}).get(a)
                shown = "" if ref is None else " ".join(f"{x:.4f}" for x in ref)
                lines.append(f"| {d} | {a} | " + " | ".join(map(_fmt, avg.values())) + f" | {shown} |")
    return "\n".join(lines) + "\n"
