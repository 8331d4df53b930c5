"""Message-round lower bounds: which round structures can possibly be secure and reliable."""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from ..channels import EventKind, Party, Transcript, Direction
from ..utils.errors import ChannelUsageError
from .bounds import min_delta_two_round


class ChannelKind(str, Enum):
    AWTP = "awtp"
    PD = "pd"


@dataclass(frozen=True)
class RoundStep:
    sender: Party
    channel: ChannelKind

    def __str__(self) -> str:
        receiver = Party.BOB if self.sender is Party.ALICE else Party.ALICE
        return f"{self.sender.value} -{self.channel.value}-> {receiver.value}"


Descriptor = Sequence[RoundStep]

A_AWTP = RoundStep(Party.ALICE, ChannelKind.AWTP)
A_PD = RoundStep(Party.ALICE, ChannelKind.PD)
B_PD = RoundStep(Party.BOB, ChannelKind.PD)

CONSTRUCTION_DESCRIPTOR: Tuple[RoundStep, ...] = (A_AWTP, B_PD, A_PD)


@dataclass(frozen=True)
class RoundForm:
    number: int
    steps: Tuple[RoundStep, RoundStep]
    # Forms whose decoder only sees one AWTP codeword fail on rate; the rest on reliability
    rate_limited: bool


def two_round_forms() -> List[RoundForm]:
    """The five two-message-round structures containing at least one AWTP round."""
    return [
        RoundForm(1, (A_AWTP, A_PD), rate_limited=False),
        RoundForm(2, (A_AWTP, A_AWTP), rate_limited=False),
        RoundForm(3, (A_AWTP, B_PD), rate_limited=True),
        RoundForm(4, (A_PD, A_AWTP), rate_limited=True),
        RoundForm(5, (B_PD, A_AWTP), rate_limited=True),
    ]


@dataclass(frozen=True)
class RoundVerdict:
    ruled_out: bool
    reason: str
    form: Optional[int] = None
    min_delta: Optional[float] = None


def minimum_message_rounds(rho_r: float, rho_w: float) -> int:
    """1 if rho_r + rho_w < 1, otherwise 3."""
    return 3 if rho_r + rho_w >= 1 else 1


def descriptor_from_transcript(transcript: Transcript) -> Tuple[RoundStep, ...]:
    steps = []
    for kind, index in transcript.events:
        if kind is EventKind.AWTP:
            steps.append(A_AWTP)
        else:
            direction = transcript.pd_messages[index].direction
            steps.append(A_PD if direction is Direction.ALICE_TO_BOB else B_PD)
    return tuple(steps)


def check_round_complexity(
    descriptor: Descriptor,
    rho_r: float,
    rho_w: float,
    message_space_size: Optional[float] = None,
) -> RoundVerdict:
    """
    Decide whether a round structure is ruled out for a secure, reliable protocol.

    Raises:
        ChannelUsageError: if the descriptor has Bob sending over AWTP
    """
    steps = tuple(descriptor)
    if any(s.channel is ChannelKind.AWTP and s.sender is not Party.ALICE for s in steps):
        raise ChannelUsageError("Only Alice may use the AWTP channel")
    if not any(s.channel is ChannelKind.AWTP for s in steps):
        return RoundVerdict(True, "no AWTP round: nothing secret can reach Bob")

    if len(steps) >= minimum_message_rounds(rho_r, rho_w):
        return RoundVerdict(False, f"{len(steps)} message rounds meet the minimum")

    if len(steps) == 1:
        return RoundVerdict(True, "a single AWTP round has rate at most 1 - rho_r - rho_w <= 0")

    form = next(f for f in two_round_forms() if f.steps == steps)
    if form.rate_limited:
        return RoundVerdict(
            True,
            "Bob decodes from one AWTP codeword, so the rate is at most 1 - rho_r - rho_w <= 0",
            form=form.number,
        )
    delta = min_delta_two_round(message_space_size if message_space_size is not None else float('inf'))
    return RoundVerdict(
        True,
        f"perfect secrecy forces 2H(delta) >= 1 - 1/|M|, so delta >= {delta:.4f}",
        form=form.number,
        min_delta=delta,
    )
