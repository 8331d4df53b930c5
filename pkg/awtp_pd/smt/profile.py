"""Bob's decoder on wires and the round/rate profile of converted construction transcripts."""

from dataclasses import dataclass

from ..channels import Direction
from ..protocol import BobState, Message, ProtocolConfig, decode_bob
from ..utils.errors import ConfigurationError
from ..utils.tapes import FixedTape
from .wires import WireTranscript, last_pd_message, smt_transmission_rate


def decode_from_wires(config: ProtocolConfig, wire_transcript: WireTranscript) -> Message:
    """Run Bob's decoder on what the wires delivered in the first round and the final public message."""
    if wire_transcript.rounds < 1:
        raise ConfigurationError("Wire transcript carries no wire round")
    bob = BobState(config=config, tape=FixedTape([], config.q))
    bob.received = wire_transcript.round_symbols(0, received=True)
    return decode_bob(bob, last_pd_message(wire_transcript, Direction.ALICE_TO_BOB))


@dataclass(frozen=True)
class RateProfile:
    rc_m: int
    transmission_rate: float
    t: int
    reference: float
    constant: float

    @property
    def ratio(self) -> float:
        return self.transmission_rate / self.reference

    @property
    def holds(self) -> bool:
        return self.ratio <= self.constant * (1 + 1e-12)


def rate_profile(config: ProtocolConfig, wire_transcript: WireTranscript) -> RateProfile:
    """
    Message rounds and transmission rate of a converted construction
    transcript, compared against C * N/(N-t) with C = u/(u-1) and t the
    configured corruption budget.
    """
    N, t = config.N, config.union_budget
    if t >= N:
        raise ConfigurationError(f"t={t} must be smaller than N={N}")
    return RateProfile(
        rc_m=wire_transcript.rc_m,
        transmission_rate=smt_transmission_rate(wire_transcript, config.message_bits),
        t=t,
        reference=N / (N - t),
        constant=config.u / (config.u - 1),
    )
