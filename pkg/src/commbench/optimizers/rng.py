"""Random number sources for optimizer runs.

Runs draw from numpy's PCG64 bit generator, whose output stream is fixed by
the seed on every platform. Update rules only call ``random``, ``uniform`` and
``integers``, so tests can substitute :class:`ScriptedRNG`.
"""

from __future__ import annotations

from collections import deque
from typing import Any, Iterable

import numpy as np

_MASK64 = (1 << 64) - 1


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(int(seed) & _MASK64))


class ScriptedRNG:
    """Replays a fixed queue of values, one per draw call.

    Each queued value (scalar or array) is broadcast to the requested size.
    ``uniform`` returns the scripted value itself and ignores its bounds, which
    keeps hand-computed examples readable.
    """

    def __init__(self, values: Iterable[Any]):
        self._queue = deque(values)
        self.calls: list[str] = []

    def _next(self, name: str, size) -> Any:
        if not self._queue:
            raise RuntimeError(f"ScriptedRNG exhausted on {name}()")
        self.calls.append(name)
        value = self._queue.popleft()
        if size is None:
            return value
        return np.broadcast_to(np.asarray(value), size).copy()

    def random(self, size=None):
        return self._next("random", size)

    def uniform(self, low=0.0, high=1.0, size=None):
        return self._next("uniform", size)

    def integers(self, low, high=None, size=None):
        value = self._next("integers", size)
        return np.asarray(value, dtype=np.int64) if size is not None else int(value)

    @property
    def remaining(self) -> int:
        return len(self._queue)
