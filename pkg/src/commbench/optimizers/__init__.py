from .core import (
    ALGORITHMS,
    AlgorithmParams,
    ConfigurationError,
    OptimizerConfig,
    RunResult,
    optimize,
)
from .gwo import gwo_step
from .mfo import flame_count, mfo_step
from .rng import ScriptedRNG, make_rng
from .sca import sca_step
from .woa import woa_step

__all__ = [
    "ALGORITHMS",
    "AlgorithmParams",
    "ConfigurationError",
    "OptimizerConfig",
    "RunResult",
    "ScriptedRNG",
    "flame_count",
    "gwo_step",
    "make_rng",
    "mfo_step",
    "optimize",
    "sca_step",
    "woa_step",
]
