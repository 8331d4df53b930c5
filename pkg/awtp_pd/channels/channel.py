"""The one-way (rho_r, rho_w)-AWTP channel and the authenticated public-discussion channel."""

from typing import Dict, Optional, Protocol, Sequence

from ..utils.errors import ChannelUsageError, MalformedMessageError, StrategyViolationError
from .types import (
    AwtpInvocation,
    Codeword,
    Direction,
    EventKind,
    Party,
    PdMessage,
    ReadWriteSets,
    Symbol,
    Transcript,
)


class ChannelAdversary(Protocol):
    """What the channel needs from a strategy."""

    sets: ReadWriteSets

    def decide(self, j: int, observed: Dict[int, Symbol], pd_history: Sequence[PdMessage]) -> Optional[Symbol]:
        ...


def _check_error(e: Optional[Symbol], j: int, u: int, q: int, sets: ReadWriteSets) -> Symbol:
    if e is None:
        return (0,) * u
    e = tuple(int(x) for x in e)
    if len(e) != u or any(not 0 <= x < q for x in e):
        raise StrategyViolationError(f"Error for component {j} is not an element of F_{q}^{u}: {e}")
    if any(e) and j not in sets.S_w:
        raise StrategyViolationError(f"Adversary wrote component {j} outside S_w={sorted(sets.S_w)}")
    return e


def awtp_transmit(
    c: Codeword,
    sets: ReadWriteSets,
    adversary: ChannelAdversary,
    transcript: Transcript,
    sender: Party = Party.ALICE,
) -> Codeword:
    """
    Send codeword c over the AWTP channel and return y = c + e.

    Components are processed in ascending index order: component j is
    revealed to the adversary (if j is in S_r) and then the adversary commits
    its error for j before component j+1 is revealed.

    Raises:
        ChannelUsageError: if anyone other than Alice sends
        StrategyViolationError: if the error is nonzero outside S_w, or sets exceed the budget
    """
    if sender is not Party.ALICE:
        raise ChannelUsageError("The AWTP channel is one-way: only Alice may send")
    if len(c) != transcript.N:
        raise MalformedMessageError(f"Codeword has {len(c)} components, expected {transcript.N}")
    if any(len(sym) != transcript.u for sym in c):
        raise MalformedMessageError(f"Every component must hold {transcript.u} field elements")
    if transcript.read_budget is not None and transcript.write_budget is not None:
        if not sets.within_budget(transcript.read_budget, transcript.write_budget):
            raise StrategyViolationError(
                f"Sets |S_r|={len(sets.S_r)}, |S_w|={len(sets.S_w)} exceed budgets "
                f"({transcript.read_budget}, {transcript.write_budget})"
            )

    q, u = transcript.q, transcript.u
    observed: Dict[int, Symbol] = {}
    pd_history = tuple(transcript.pd_messages)
    errors = []
    for j, symbol in enumerate(c):
        if j in sets.S_r:
            observed[j] = symbol
        errors.append(_check_error(adversary.decide(j, observed, pd_history), j, u, q, sets))

    received = tuple(
        tuple((a + b) % q for a, b in zip(sym, err)) for sym, err in zip(c, errors)
    )
    transcript.invocations.append(AwtpInvocation(sent=tuple(c), error=tuple(errors), received=received))
    transcript.events.append((EventKind.AWTP, len(transcript.invocations) - 1))
    return received


def pd_send(bits: str, direction: Direction, transcript: Transcript) -> str:
    """Deliver bits unchanged over the public channel, recording them for everyone."""
    if any(b not in '01' for b in bits):
        raise MalformedMessageError("PD payload must be a binary string")
    direction = Direction(direction)
    message = PdMessage(bits=bits, direction=direction, sequence=len(transcript.pd_messages))
    transcript.pd_messages.append(message)
    transcript.events.append((EventKind.PD, message.sequence))
    return bits
