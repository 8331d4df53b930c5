"""Built-in adversary strategies for the AWTP channel."""

from abc import ABC, abstractmethod
from typing import Callable, Dict, Optional, Sequence

from ..channels import PdMessage, ReadWriteSets, Symbol
from ..utils.tapes import RandomTape


class AdversaryStrategy(ABC):
    """
    A strategy bound to one execution.

    The channel calls ``decide`` once per component, in ascending index order,
    after revealing that component if it lies in S_r. Returning None (or an
    all-zero symbol) leaves the component untouched.
    """

    name = "abstract"

    def __init__(self, sets: ReadWriteSets, tape: Optional[RandomTape] = None, u: int = 2):
        self.sets = sets
        self.tape = tape
        self.u = u

    @abstractmethod
    def decide(self, j: int, observed: Dict[int, Symbol], pd_history: Sequence[PdMessage]) -> Optional[Symbol]:
        ...

    def _uniform_symbol(self) -> Symbol:
        if self.tape is None:
            raise ValueError(f"{self.name} adversary needs a random tape")
        return tuple(self.tape.draw(self.u))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(S_r={sorted(self.sets.S_r)}, S_w={sorted(self.sets.S_w)})"


class PassiveStrategy(AdversaryStrategy):
    """Reads S_r and never writes."""

    name = "passive"

    def decide(self, j, observed, pd_history):
        return None


class UniformErrorStrategy(AdversaryStrategy):
    """Adds an error drawn uniformly from Sigma to every component of the precommitted S_w."""

    name = "adv1_uniform"

    def decide(self, j, observed, pd_history):
        if j not in self.sets.S_w:
            return None
        return self._uniform_symbol()


class SubstitutionStrategy(AdversaryStrategy):
    """
    Replaces every S_w component with a fresh uniform element of Sigma.

    On S_b the old value is known, so e = new - old. On write-only positions
    the old value is hidden and a uniform error has the same effect.
    """

    name = "substitution"

    def decide(self, j, observed, pd_history):
        if j not in self.sets.S_w:
            return None
        new = self._uniform_symbol()
        old = observed.get(j)
        if old is None:
            return new
        q = self.tape.q
        return tuple((a - b) % q for a, b in zip(new, old))


DecideFn = Callable[[int, Dict[int, Symbol], Sequence[PdMessage], Optional[RandomTape]], Optional[Symbol]]


class CallbackStrategy(AdversaryStrategy):
    """Wraps a user function ``fn(j, observed, pd_history, tape)``."""

    name = "callback"

    def __init__(self, sets: ReadWriteSets, fn: DecideFn, tape: Optional[RandomTape] = None, u: int = 2):
        super().__init__(sets, tape, u)
        self.fn = fn

    def decide(self, j, observed, pd_history):
        return self.fn(j, observed, pd_history, self.tape)


def passive(sets: ReadWriteSets, tape: Optional[RandomTape] = None, u: int = 2) -> PassiveStrategy:
    return PassiveStrategy(sets, tape, u)


def adv1_uniform(sets: ReadWriteSets, tape: RandomTape, u: int = 2) -> UniformErrorStrategy:
    return UniformErrorStrategy(sets, tape, u)


def substitution(sets: ReadWriteSets, tape: RandomTape, u: int = 2) -> SubstitutionStrategy:
    return SubstitutionStrategy(sets, tape, u)
