"""Direct pairwise comparison of two algorithms' run samples.

Paired runs of a primary and an alternative algorithm fill a 3x3 prasatul
matrix: rows are the optimality level of the primary's result (best, average,
worst, judged against the pooled sample extremes) and columns the pairwise
outcome (win, tie, loose). D-scores read conditional rates off the matrix,
K-scores read its marginals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

OPTIMALITY = ("best", "average", "worst")
COMPARABILITY = ("win", "tie", "loose")
SCORE_FIELDS = ("DO", "DC", "KO", "KC", "KT")
AVERAGE_FIELDS = ("ADO", "ADC", "AKO", "AKC", "AKT")

DEFAULT_EPSILON = 1e-6


def classify_optimality(f: float, pool: Sequence[float], epsilon: float = DEFAULT_EPSILON) -> str:
    if len(pool) == 0:
        raise ValueError("optimality pool is empty")
    hi, lo = max(pool), min(pool)
    if f >= hi - epsilon:
        return "best"
    if f <= lo + epsilon:
        return "worst"
    return "average"


def classify_comparability(f_p: float, f_q: float, epsilon: float = DEFAULT_EPSILON) -> str:
    if f_p > f_q + epsilon:
        return "win"
    if f_p < f_q - epsilon:
        return "loose"
    return "tie"


@dataclass(frozen=True, eq=False)
class PrasatulMatrix:
    counts: np.ndarray  # 3x3, rows OPTIMALITY, columns COMPARABILITY
    total: int

    def __post_init__(self) -> None:
        counts = np.asarray(self.counts, dtype=float)
        if counts.shape != (3, 3) or np.any(counts < 0):
            raise ValueError("prasatul matrix needs a non-negative 3x3 count table")
        if self.total < 1:
            raise ValueError("prasatul matrix needs at least one comparison")
        object.__setattr__(self, "counts", counts)

    @property
    def cells(self) -> np.ndarray:
        """Cell masses normalised by the number of comparisons."""
        return self.counts / self.total

    def cell(self, level: str, outcome: str) -> float:
        return float(self.cells[OPTIMALITY.index(level), COMPARABILITY.index(outcome)])


def build_prasatul(
    runs_p: Sequence[float],
    runs_q: Sequence[float],
    epsilon: float = DEFAULT_EPSILON,
    pool: str = "both",
) -> PrasatulMatrix:
    """Tally paired runs (index i of each list) into a prasatul matrix.

    ``pool`` selects the sample whose extremes define best/worst: ``"both"``
    pools the two algorithms, ``"primary"`` uses the primary's runs only.
    """
    if len(runs_p) != len(runs_q):
        raise ValueError(f"paired samples differ in length: {len(runs_p)} vs {len(runs_q)}")
    if len(runs_p) == 0:
        raise ValueError("need at least one paired run")
    if pool == "both":
        reference = list(runs_p) + list(runs_q)
    elif pool == "primary":
        reference = list(runs_p)
    else:
        raise ValueError(f"pool must be 'both' or 'primary', not {pool!r}")
    counts = np.zeros((3, 3))
    for fp, fq in zip(runs_p, runs_q):
        row = OPTIMALITY.index(classify_optimality(fp, reference, epsilon))
        col = COMPARABILITY.index(classify_comparability(fp, fq, epsilon))
        counts[row, col] += 1
    return PrasatulMatrix(counts, len(runs_p))


def _weighted(parts: np.ndarray) -> float:
    return float(parts[0] + 0.5 * parts[1] - parts[2])


def _safe_ratio(num: np.ndarray, den: np.ndarray) -> np.ndarray:
    return np.divide(num, den, out=np.zeros_like(num, dtype=float), where=den > 0)


def d_scores(m: PrasatulMatrix) -> tuple[float, float]:
    """Direct optimality and direct comparability.

    ``O_l`` is the win rate within optimality row ``l``; ``C_m`` is the share
    of best-level results within outcome column ``m``. Empty rows/columns
    contribute 0.
    """
    cells = m.cells
    o = _safe_ratio(cells[:, 0], cells.sum(axis=1))
    c = _safe_ratio(cells[0, :], cells.sum(axis=0))
    return _weighted(o), _weighted(c)


def k_scores(m: PrasatulMatrix) -> tuple[float, float, float]:
    cells = m.cells
    mass = cells.sum()
    ko = _weighted(cells.sum(axis=1) / mass)
    kc = _weighted(cells.sum(axis=0) / mass)
    kt = float(cells[:2, :2].sum() / mass)
    return ko, kc, kt


@dataclass(frozen=True)
class ScoreSet:
    primary: str
    alternative: str
    dataset: str
    DO: float
    DC: float
    KO: float
    KC: float
    KT: float

    def values(self) -> tuple[float, ...]:
        return tuple(getattr(self, f) for f in SCORE_FIELDS)


@dataclass(frozen=True)
class AveragedScores:
    primary: str
    dataset: str
    ADO: float
    ADC: float
    AKO: float
    AKC: float
    AKT: float

    def values(self) -> tuple[float, ...]:
        return tuple(getattr(self, f) for f in AVERAGE_FIELDS)


def score_pair(
    primary: str,
    alternative: str,
    dataset: str,
    runs_p: Sequence[float],
    runs_q: Sequence[float],
    epsilon: float = DEFAULT_EPSILON,
    pool: str = "both",
) -> ScoreSet:
    m = build_prasatul(runs_p, runs_q, epsilon, pool)
    do, dc = d_scores(m)
    ko, kc, kt = k_scores(m)
    return ScoreSet(primary, alternative, dataset, do, dc, ko, kc, kt)


def average_scores(scores: Iterable[ScoreSet]) -> AveragedScores:
    scores = list(scores)
    if not scores:
        raise ValueError("cannot average an empty list of score sets")
    keys = {(s.primary, s.dataset) for s in scores}
    if len(keys) != 1:
        raise ValueError(f"score sets mix primaries/datasets: {sorted(keys)}")
    primary, dataset = keys.pop()
    means = np.mean([s.values() for s in scores], axis=0)
    return AveragedScores(primary, dataset, *(float(x) for x in means))


def rank(values: dict[str, float]) -> list[tuple[str, int]]:
    """Rank algorithms by descending value; ties share the smaller rank.

    Output is ordered by (rank, name).
    """
    ordered = sorted(values.items(), key=lambda kv: (-kv[1], kv[0]))
    ranks: list[tuple[str, int]] = []
    for pos, (name, value) in enumerate(ordered, start=1):
        if ranks and value == values[ranks[-1][0]]:
            ranks.append((name, ranks[-1][1]))
        else:
            ranks.append((name, pos))
    return ranks
