"""Alice's and Bob's per-execution state."""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ..channels import Codeword
from ..ffield import FieldElement, PrimeModulus
from ..utils.errors import MalformedMessageError
from ..utils.tapes import RandomTape
from .config import ProtocolConfig


@dataclass(frozen=True)
class Message:
    """A message of exactly l elements of F_q, held as ints."""

    values: Tuple[int, ...]
    q: int

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(int(v) for v in self.values))
        if any(not 0 <= v < self.q for v in self.values):
            raise MalformedMessageError(f"Message values must lie in [0, {self.q})")

    @classmethod
    def from_elements(cls, elements: Sequence[FieldElement]) -> 'Message':
        if not elements:
            raise MalformedMessageError("Message must not be empty")
        return cls(tuple(e.value for e in elements), elements[0].q)

    @classmethod
    def zeros(cls, config: ProtocolConfig) -> 'Message':
        return cls((0,) * config.message_length, config.q)

    def elements(self) -> List[FieldElement]:
        modulus = PrimeModulus(self.q)
        return [FieldElement(v, modulus) for v in self.values]

    def __len__(self) -> int:
        return len(self.values)


@dataclass
class AliceState:
    config: ProtocolConfig
    message: Message
    tape: RandomTape
    r: List[Tuple[int, ...]] = field(default_factory=list)
    beta: List[int] = field(default_factory=list)
    codeword: Optional[Codeword] = None
    v: List[int] = field(default_factory=list)
    key: List[int] = field(default_factory=list)

    def __post_init__(self):
        if len(self.message) != self.config.message_length:
            raise MalformedMessageError(
                f"Message has {len(self.message)} elements, expected l={self.config.message_length}"
            )
        if self.message.q != self.config.q:
            raise MalformedMessageError(f"Message is over F_{self.message.q}, protocol uses F_{self.config.q}")


@dataclass
class BobState:
    config: ProtocolConfig
    tape: RandomTape
    received: Optional[Codeword] = None
    alphas: List[int] = field(default_factory=list)
    tags: List[int] = field(default_factory=list)
    v: List[int] = field(default_factory=list)
    key: List[int] = field(default_factory=list)
    output: Optional[Message] = None

    @property
    def r_prime(self) -> List[Tuple[int, ...]]:
        return [symbol[:-1] for symbol in self.received or ()]

    @property
    def beta_prime(self) -> List[int]:
        return [symbol[-1] for symbol in self.received or ()]
