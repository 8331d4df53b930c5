"""
Restricted AWTP-PD transcripts viewed as one-way symmetric SMT-PD wire transcripts.

Component i of every AWTP codeword travels on wire i; public-discussion
messages are carried over unchanged and the corrupted wire set is S = S_r = S_w.
"""

import math
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Tuple

from ..channels import (
    AwtpInvocation,
    Direction,
    EventKind,
    PdMessage,
    ReadWriteSets,
    Symbol,
    Transcript,
)
from ..utils.errors import ConfigurationError, RestrictionError, SymmetryError, TranscriptFormatError

Alphabet = Tuple[int, int]


@dataclass(frozen=True)
class Wire:
    """Traffic of one wire: per-round alphabet (q, u), sent and received symbols."""

    index: int
    alphabets: Tuple[Alphabet, ...]
    sent: Tuple[Symbol, ...]
    received: Tuple[Symbol, ...]

    @property
    def rounds(self) -> int:
        return len(self.sent)

    def bits(self) -> float:
        """sum over rounds of log2 |W| for this wire."""
        return sum(u * math.log2(q) for q, u in self.alphabets)


@dataclass
class WireTranscript:
    N: int
    wires: List[Wire]
    corrupted: FrozenSet[int]
    pd_messages: List[PdMessage] = field(default_factory=list)
    events: List[Tuple[EventKind, int]] = field(default_factory=list)
    read_budget: Optional[int] = None
    write_budget: Optional[int] = None
    verified_count: Optional[int] = None

    @property
    def t(self) -> int:
        return len(self.corrupted)

    @property
    def rounds(self) -> int:
        return self.wires[0].rounds if self.wires else 0

    @property
    def rc_m(self) -> int:
        return len(self.events)

    def is_symmetric(self) -> bool:
        return len({w.alphabets for w in self.wires}) <= 1

    def round_symbols(self, r: int, received: bool = False) -> Tuple[Symbol, ...]:
        return tuple((w.received if received else w.sent)[r] for w in self.wires)

    def adversary_view(self) -> tuple:
        """Same layout as Transcript.adversary_view with S_r = corrupted."""
        watched = sorted(self.corrupted)
        view = []
        for kind, index in self.events:
            if kind is EventKind.AWTP:
                view.append(tuple((i, self.wires[i].sent[index]) for i in watched))
            else:
                msg = self.pd_messages[index]
                view.append((msg.direction.value, msg.bits))
        return tuple(view)


def awtp_to_smt(transcript: Transcript) -> WireTranscript:
    """
    Map a restricted transcript onto N wires.

    Raises:
        RestrictionError: if S_r != S_w
    """
    sets = transcript.sets
    if not sets.is_restricted:
        raise RestrictionError(
            f"SMT conversion needs S_r = S_w, got S_r={sorted(sets.S_r)}, S_w={sorted(sets.S_w)}"
        )
    alphabets = ((transcript.q, transcript.u),) * transcript.ell_c
    wires = [
        Wire(
            index=i,
            alphabets=alphabets,
            sent=tuple(inv.sent[i] for inv in transcript.invocations),
            received=tuple(inv.received[i] for inv in transcript.invocations),
        )
        for i in range(transcript.N)
    ]
    return WireTranscript(
        N=transcript.N,
        wires=wires,
        corrupted=sets.S_r,
        pd_messages=list(transcript.pd_messages),
        events=list(transcript.events),
        read_budget=transcript.read_budget,
        write_budget=transcript.write_budget,
        verified_count=transcript.verified_count,
    )


def smt_to_awtp(wire_transcript: WireTranscript) -> Transcript:
    """
    Inverse of awtp_to_smt.

    Raises:
        SymmetryError: if wires do not share one per-round alphabet
    """
    wt = wire_transcript
    if len(wt.wires) != wt.N or any(w.index != i for i, w in enumerate(wt.wires)):
        raise TranscriptFormatError(f"Expected wires 0..{wt.N - 1} in order")
    if not wt.is_symmetric():
        raise SymmetryError("Wires carry different per-round alphabets")
    alphabets = set(wt.wires[0].alphabets) if wt.wires else set()
    if len(alphabets) != 1:
        raise TranscriptFormatError("AWTP codewords need exactly one alphabet across all wire rounds")
    q, u = alphabets.pop()

    invocations = []
    for r in range(wt.rounds):
        sent = wt.round_symbols(r)
        received = wt.round_symbols(r, received=True)
        error = tuple(
            tuple((b - a) % q for a, b in zip(s, y)) for s, y in zip(sent, received)
        )
        invocations.append(AwtpInvocation(sent=sent, error=error, received=received))

    return Transcript(
        N=wt.N,
        u=u,
        q=q,
        sets=ReadWriteSets(wt.N, wt.corrupted, wt.corrupted),
        invocations=invocations,
        pd_messages=list(wt.pd_messages),
        events=list(wt.events),
        read_budget=wt.read_budget,
        write_budget=wt.write_budget,
        verified_count=wt.verified_count,
    )


def smt_transmission_rate(wire_transcript: WireTranscript, message_bits: float) -> float:
    """TR = (sum over wires of log2 |W_i|) / log2 |M|."""
    if message_bits <= 0:
        raise ConfigurationError(f"Message size must be positive, got {message_bits} bits")
    return sum(w.bits() for w in wire_transcript.wires) / message_bits


def last_pd_message(wire_transcript: WireTranscript, direction: Direction) -> PdMessage:
    for msg in reversed(wire_transcript.pd_messages):
        if msg.direction is direction:
            return msg
    raise TranscriptFormatError(f"No {direction.value} public message in wire transcript")
