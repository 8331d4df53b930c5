"""Channel-level data types: read/write sets, codewords, PD messages, transcripts."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional, Tuple

import numpy as np

from ..utils.errors import ConfigurationError

Symbol = Tuple[int, ...]
Codeword = Tuple[Symbol, ...]


class Party(str, Enum):
    ALICE = "alice"
    BOB = "bob"


class Direction(str, Enum):
    ALICE_TO_BOB = "alice->bob"
    BOB_TO_ALICE = "bob->alice"


class EventKind(str, Enum):
    AWTP = "awtp"
    PD = "pd"


@dataclass(frozen=True)
class ReadWriteSets:
    """
    The adversary's read set S_r and write set S_w over [N], with the derived
    partition S_a = S_r - S_w, S_b = S_r & S_w, S_c = S_w - S_r, S_d = rest.
    """

    N: int
    S_r: FrozenSet[int]
    S_w: FrozenSet[int]

    def __post_init__(self):
        if self.N < 1:
            raise ConfigurationError(f"N must be positive, got {self.N}")
        object.__setattr__(self, 'S_r', frozenset(self.S_r))
        object.__setattr__(self, 'S_w', frozenset(self.S_w))
        for name, indices in (('S_r', self.S_r), ('S_w', self.S_w)):
            bad = [i for i in indices if not 0 <= i < self.N]
            if bad:
                raise ConfigurationError(f"{name} contains indices outside [0, {self.N}): {sorted(bad)}")

    @classmethod
    def of(cls, N: int, read: Iterable[int], write: Iterable[int]) -> 'ReadWriteSets':
        return cls(N, frozenset(read), frozenset(write))

    @classmethod
    def random(cls, N: int, read_size: int, write_size: int, union_size: int, rng: np.random.Generator) -> 'ReadWriteSets':
        """
        Uniformly placed sets with |S_r| = read_size, |S_w| = write_size and
        |S_r | S_w| = union_size.
        """
        overlap = read_size + write_size - union_size
        if not max(0, read_size + write_size - N) <= overlap <= min(read_size, write_size):
            raise ConfigurationError(
                f"Cannot place |S_r|={read_size}, |S_w|={write_size} with union {union_size} in [{N}]"
            )
        perm = [int(i) for i in rng.permutation(N)]
        read = perm[:read_size]
        start = read_size - overlap
        write = perm[start:start + write_size]
        return cls(N, frozenset(read), frozenset(write))

    @property
    def S_a(self) -> FrozenSet[int]:
        return self.S_r - self.S_w

    @property
    def S_b(self) -> FrozenSet[int]:
        return self.S_r & self.S_w

    @property
    def S_c(self) -> FrozenSet[int]:
        return self.S_w - self.S_r

    @property
    def S_d(self) -> FrozenSet[int]:
        return frozenset(range(self.N)) - (self.S_r | self.S_w)

    @property
    def union(self) -> FrozenSet[int]:
        return self.S_r | self.S_w

    @property
    def rho(self) -> Fraction:
        return Fraction(len(self.union), self.N)

    @property
    def is_restricted(self) -> bool:
        return self.S_r == self.S_w

    def within_budget(self, read_budget: int, write_budget: int, union_budget: Optional[int] = None) -> bool:
        if len(self.S_r) > read_budget or len(self.S_w) > write_budget:
            return False
        return union_budget is None or len(self.union) <= union_budget


@dataclass(frozen=True)
class PdMessage:
    """A public-discussion message; sequence is assigned when it is sent."""

    bits: str
    direction: Direction
    sequence: Optional[int] = None


@dataclass(frozen=True)
class AwtpInvocation:
    sent: Codeword
    error: Codeword
    received: Codeword


@dataclass
class Transcript:
    """
    Append-only record of one execution.

    ``events`` lists (kind, index) pairs in the order things happened, indexing
    into ``invocations`` or ``pd_messages``.
    """

    N: int
    u: int
    q: int
    sets: ReadWriteSets
    invocations: List[AwtpInvocation] = field(default_factory=list)
    pd_messages: List[PdMessage] = field(default_factory=list)
    events: List[Tuple[EventKind, int]] = field(default_factory=list)
    read_budget: Optional[int] = None
    write_budget: Optional[int] = None
    verified_count: Optional[int] = None

    @property
    def awtp_sent(self) -> List[Codeword]:
        return [inv.sent for inv in self.invocations]

    @property
    def awtp_received(self) -> List[Codeword]:
        return [inv.received for inv in self.invocations]

    @property
    def errors(self) -> List[Codeword]:
        return [inv.error for inv in self.invocations]

    @property
    def ell_c(self) -> int:
        return len(self.invocations)

    @property
    def ell_d(self) -> int:
        return len(self.pd_messages)

    @property
    def rc_m(self) -> int:
        """Message-round complexity: one round per channel invocation."""
        return len(self.events)

    @property
    def pd_bits(self) -> int:
        return sum(len(msg.bits) for msg in self.pd_messages)

    def adversary_view(self) -> tuple:
        """
        The adversary's observations in order: for every AWTP invocation the
        (index, symbol) pairs of S_r in ascending index order, and every PD payload.
        """
        read = sorted(self.sets.S_r)
        view = []
        for kind, index in self.events:
            if kind is EventKind.AWTP:
                sent = self.invocations[index].sent
                view.append(tuple((j, sent[j]) for j in read))
            else:
                msg = self.pd_messages[index]
                view.append((msg.direction.value, msg.bits))
        return tuple(view)

    def error_weights(self) -> List[int]:
        return [sum(1 for sym in inv.error if any(sym)) for inv in self.invocations]
