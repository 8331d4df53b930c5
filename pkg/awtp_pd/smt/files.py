"""
Wire-transcript files: one record per wire per round plus the public messages,
with the same element encoding as AWTP transcripts.
"""

from pathlib import Path
from typing import Union

from ..channels import EventKind, PdMessage, decode_elements, encode_elements, iter_records, pack_record
from ..channels.records import PD_DIRECTIONS, PD_TAGS, optional_bits, optional_from, uint_bits, uints_from_bits
from ..utils.errors import TranscriptFormatError
from .wires import Wire, WireTranscript

WIRE_MAGIC = b"AWTPSMT\x01"


def serialize_wire_transcript(wire_transcript: WireTranscript) -> bytes:
    wt = wire_transcript
    if not wt.is_symmetric():
        raise TranscriptFormatError("Only symmetric wire transcripts can be written")
    alphabets = wt.wires[0].alphabets if wt.wires else ()
    header = (
        uint_bits(wt.N) + uint_bits(wt.rounds)
        + optional_bits(wt.read_budget) + optional_bits(wt.write_budget) + optional_bits(wt.verified_count)
    )
    out = [WIRE_MAGIC, pack_record(b'H', header)]
    out.append(pack_record(b'L', ''.join(uint_bits(q, 64) + uint_bits(u) for q, u in alphabets)))
    out.append(pack_record(b'S', ''.join(uint_bits(i) for i in sorted(wt.corrupted))))
    for kind, index in wt.events:
        if kind is EventKind.AWTP:
            q, _ = alphabets[index]
            for wire in wt.wires:
                out.append(pack_record(b'X', encode_elements(wire.sent[index], q)))
                out.append(pack_record(b'Y', encode_elements(wire.received[index], q)))
        else:
            msg = wt.pd_messages[index]
            out.append(pack_record(PD_TAGS[msg.direction], msg.bits))
    return b''.join(out)


def deserialize_wire_transcript(data: bytes) -> WireTranscript:
    records = list(iter_records(data, WIRE_MAGIC))
    if len(records) < 3 or [r[0] for r in records[:3]] != [b'H', b'L', b'S']:
        raise TranscriptFormatError("Wire transcript must start with H, L and S records")
    header = records[0][1]
    if len(header) != 5 * 32:
        raise TranscriptFormatError("Malformed wire transcript header")
    N, rounds, read_budget, write_budget, verified = uints_from_bits(header)
    table = records[1][1]
    if len(table) != rounds * 96:
        raise TranscriptFormatError("Alphabet table does not match the round count")
    alphabets = tuple(
        (int(table[i:i + 64], 2), int(table[i + 64:i + 96], 2)) for i in range(0, len(table), 96)
    )
    corrupted = frozenset(uints_from_bits(records[2][1]))

    sent = [[] for _ in range(N)]
    received = [[] for _ in range(N)]
    pd_messages, events = [], []
    rest = records[3:]
    i, r = 0, 0
    try:
        while i < len(rest):
            tag, bits = rest[i]
            if tag == b'X':
                if r >= rounds or i + 2 * N > len(rest):
                    raise TranscriptFormatError("Wire round exceeds the declared round count")
                q, u = alphabets[r]
                for w in range(N):
                    x_tag, x_bits = rest[i + 2 * w]
                    y_tag, y_bits = rest[i + 2 * w + 1]
                    if (x_tag, y_tag) != (b'X', b'Y'):
                        raise TranscriptFormatError(f"Round {r} is missing records for wire {w}")
                    sent[w].append(tuple(decode_elements(x_bits, u, q)))
                    received[w].append(tuple(decode_elements(y_bits, u, q)))
                events.append((EventKind.AWTP, r))
                r += 1
                i += 2 * N
            elif tag in PD_DIRECTIONS:
                seq = len(pd_messages)
                pd_messages.append(PdMessage(bits=bits, direction=PD_DIRECTIONS[tag], sequence=seq))
                events.append((EventKind.PD, seq))
                i += 1
            else:
                raise TranscriptFormatError(f"Unknown record tag {tag!r}")
    except ValueError as e:
        if isinstance(e, TranscriptFormatError):
            raise
        raise TranscriptFormatError(f"Corrupt wire record: {e}") from e
    if r != rounds:
        raise TranscriptFormatError(f"Declared {rounds} wire rounds, found {r}")

    wires = [
        Wire(index=w, alphabets=alphabets, sent=tuple(sent[w]), received=tuple(received[w]))
        for w in range(N)
    ]
    return WireTranscript(
        N=N, wires=wires, corrupted=corrupted, pd_messages=pd_messages, events=events,
        read_budget=optional_from(read_budget), write_budget=optional_from(write_budget),
        verified_count=optional_from(verified),
    )


def write_wire_transcript(path: Union[str, Path], wire_transcript: WireTranscript):
    Path(path).write_bytes(serialize_wire_transcript(wire_transcript))


def read_wire_transcript(path: Union[str, Path]) -> WireTranscript:
    return deserialize_wire_transcript(Path(path).read_bytes())
