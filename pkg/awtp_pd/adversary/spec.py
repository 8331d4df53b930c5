"""Serialisable adversary descriptions, resolvable into strategies in worker processes."""

from enum import Enum
from typing import List, Optional

import numpy as np
from pydantic import BaseModel

from ..channels import ReadWriteSets
from ..utils.errors import ConfigurationError
from ..utils.tapes import RandomTape
from .strategies import AdversaryStrategy, PassiveStrategy, SubstitutionStrategy, UniformErrorStrategy


class AdversaryKind(str, Enum):
    PASSIVE = "passive"
    ADV1_UNIFORM = "adv1_uniform"
    SUBSTITUTION = "substitution"


STRATEGY_CLASSES = {
    AdversaryKind.PASSIVE: PassiveStrategy,
    AdversaryKind.ADV1_UNIFORM: UniformErrorStrategy,
    AdversaryKind.SUBSTITUTION: SubstitutionStrategy,
}


class AdversarySpec(BaseModel):
    """
    Strategy kind plus read/write sets. A set left as None is chosen at random
    (once per experiment) within the configured budget.
    """

    kind: AdversaryKind = AdversaryKind.SUBSTITUTION
    read_set: Optional[List[int]] = None
    write_set: Optional[List[int]] = None

    @property
    def is_explicit(self) -> bool:
        return self.read_set is not None and self.write_set is not None

    def resolve_sets(self, N: int, read_budget: int, write_budget: int, union_budget: int,
                     rng: Optional[np.random.Generator] = None) -> ReadWriteSets:
        """
        Explicit sets are checked against the budgets; random sets fill them exactly.
        A single explicit set is completed at random around it.
        """
        if self.is_explicit:
            sets = ReadWriteSets.of(N, self.read_set, self.write_set)
            if not sets.within_budget(read_budget, write_budget, union_budget):
                raise ConfigurationError(
                    f"Explicit sets |S_r|={len(sets.S_r)}, |S_w|={len(sets.S_w)}, "
                    f"|S_r|S_w|={len(sets.union)} exceed budgets ({read_budget}, {write_budget}, {union_budget})"
                )
            return sets
        if rng is None:
            raise ConfigurationError("Random read/write sets need a generator")

        if self.read_set is None and self.write_set is None:
            return ReadWriteSets.random(N, read_budget, write_budget, union_budget, rng)

        fixed = frozenset(self.read_set if self.read_set is not None else self.write_set)
        fixed_budget = read_budget if self.read_set is not None else write_budget
        other_budget = write_budget if self.read_set is not None else read_budget
        if len(fixed) > fixed_budget:
            raise ConfigurationError(f"Explicit set of size {len(fixed)} exceeds budget {fixed_budget}")
        # Fill the other set, preferring positions outside the fixed set up to the union budget
        outside = [int(i) for i in rng.permutation(N) if int(i) not in fixed]
        inside = [int(i) for i in rng.permutation(sorted(fixed))] if fixed else []
        fresh = min(other_budget, max(0, union_budget - len(fixed)), len(outside))
        other = outside[:fresh] + inside[:other_budget - fresh]
        if self.read_set is not None:
            return ReadWriteSets.of(N, fixed, other)
        return ReadWriteSets.of(N, other, fixed)

    def build(self, sets: ReadWriteSets, tape: Optional[RandomTape], u: int) -> AdversaryStrategy:
        return STRATEGY_CLASSES[self.kind](sets, tape, u)
