"""Random tapes: the only source of randomness for parties and adversaries."""

from abc import ABC, abstractmethod
from typing import List, Sequence, Union

import numpy as np

from .errors import TapeExhaustedError

SeedLike = Union[int, Sequence[int]]

# Stream identifiers mixed into per-trial seeds
SETS_STREAM = 0
TRIAL_STREAM = 1


class RandomTape(ABC):
    """A source of uniform symbols in [0, q)."""

    def __init__(self, q: int):
        self.q = q

    @abstractmethod
    def draw(self, count: int) -> List[int]:
        """Next ``count`` symbols of the tape."""

    def draw_one(self) -> int:
        return self.draw(1)[0]


class FixedTape(RandomTape):
    """An explicit finite tape, used for enumeration and replay."""

    def __init__(self, values: Sequence[int], q: int):
        super().__init__(q)
        if any(not 0 <= v < q for v in values):
            raise ValueError(f"Tape values must lie in [0, {q})")
        self.values = list(values)
        self.position = 0

    def draw(self, count: int) -> List[int]:
        end = self.position + count
        if end > len(self.values):
            raise TapeExhaustedError(
                f"Tape of length {len(self.values)} exhausted at position {self.position} (+{count})"
            )
        out = self.values[self.position:end]
        self.position = end
        return out

    @property
    def remaining(self) -> int:
        return len(self.values) - self.position


class GeneratorTape(RandomTape):
    """Uniform symbols drawn from a numpy Generator."""

    def __init__(self, rng: np.random.Generator, q: int):
        super().__init__(q)
        self.rng = rng

    def draw(self, count: int) -> List[int]:
        if count <= 0:
            return []
        return self.rng.integers(0, self.q, size=count).tolist()

    @classmethod
    def from_seed(cls, seed: SeedLike, q: int) -> 'GeneratorTape':
        return cls(np.random.default_rng(seed), q)


def trial_rng(master_seed: int, trial: int, stream: int = TRIAL_STREAM) -> np.random.Generator:
    """Generator for one trial; SeedSequence hashes (seed, stream, trial) into the state."""
    return np.random.default_rng([master_seed, stream, trial])


def sets_rng(master_seed: int) -> np.random.Generator:
    """Generator used once per experiment to precommit random read/write sets."""
    return np.random.default_rng([master_seed, SETS_STREAM])
