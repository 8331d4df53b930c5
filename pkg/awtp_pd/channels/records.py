"""
Length-prefixed record files for transcripts.

A file is a magic prefix followed by records of the form
tag (1 byte) | bit length (u32, big endian) | payload bits padded to whole bytes.
"""

import struct
from pathlib import Path
from typing import Iterator, List, Sequence, Tuple, Union

from ..utils.errors import TranscriptFormatError
from .codec import encode_elements, decode_elements
from .types import (
    AwtpInvocation,
    Direction,
    EventKind,
    PdMessage,
    ReadWriteSets,
    Transcript,
)

TRANSCRIPT_MAGIC = b"AWTPPD\x01"

PD_TAGS = {Direction.ALICE_TO_BOB: b'D', Direction.BOB_TO_ALICE: b'B'}
PD_DIRECTIONS = {tag: direction for direction, tag in PD_TAGS.items()}


def pack_record(tag: bytes, bits: str) -> bytes:
    nbytes = (len(bits) + 7) // 8
    payload = int(bits.ljust(nbytes * 8, '0'), 2).to_bytes(nbytes, 'big') if bits else b''
    return tag + struct.pack('>I', len(bits)) + payload


def iter_records(data: bytes, magic: bytes) -> Iterator[Tuple[bytes, str]]:
    if not data.startswith(magic):
        raise TranscriptFormatError("Missing or wrong file magic")
    pos = len(magic)
    while pos < len(data):
        if pos + 5 > len(data):
            raise TranscriptFormatError(f"Truncated record header at byte {pos}")
        tag = data[pos:pos + 1]
        (nbits,) = struct.unpack('>I', data[pos + 1:pos + 5])
        nbytes = (nbits + 7) // 8
        start = pos + 5
        if start + nbytes > len(data):
            raise TranscriptFormatError(f"Truncated record payload at byte {start}")
        raw = data[start:start + nbytes]
        bits = format(int.from_bytes(raw, 'big'), f'0{nbytes * 8}b')[:nbits] if nbytes else ''
        yield tag, bits
        pos = start + nbytes


def uint_bits(value: int, width: int = 32) -> str:
    return format(value, f'0{width}b')


def uints_from_bits(bits: str, width: int = 32) -> List[int]:
    if len(bits) % width:
        raise TranscriptFormatError(f"Integer block of {len(bits)} bits is not a multiple of {width}")
    return [int(bits[i:i + width], 2) for i in range(0, len(bits), width)]


def optional_bits(value) -> str:
    """Optional non-negative ints are stored as value+1, with 0 meaning absent."""
    return uint_bits(0 if value is None else value + 1)


def optional_from(raw: int):
    return None if raw == 0 else raw - 1


def flatten(codeword: Sequence[Sequence[int]]) -> List[int]:
    return [x for symbol in codeword for x in symbol]


def unflatten(values: Sequence[int], N: int, u: int) -> tuple:
    return tuple(tuple(values[i * u:(i + 1) * u]) for i in range(N))


def serialize_transcript(transcript: Transcript) -> bytes:
    t = transcript
    header = (
        uint_bits(t.q, 64) + uint_bits(t.N) + uint_bits(t.u)
        + optional_bits(t.read_budget) + optional_bits(t.write_budget) + optional_bits(t.verified_count)
    )
    out = [TRANSCRIPT_MAGIC, pack_record(b'H', header)]
    out.append(pack_record(b'R', ''.join(uint_bits(i) for i in sorted(t.sets.S_r))))
    out.append(pack_record(b'W', ''.join(uint_bits(i) for i in sorted(t.sets.S_w))))
    for kind, index in t.events:
        if kind is EventKind.AWTP:
            inv = t.invocations[index]
            out.append(pack_record(b'A', encode_elements(flatten(inv.sent), t.q)))
            out.append(pack_record(b'E', encode_elements(flatten(inv.error), t.q)))
        else:
            msg = t.pd_messages[index]
            out.append(pack_record(PD_TAGS[msg.direction], msg.bits))
    return b''.join(out)


def deserialize_transcript(data: bytes) -> Transcript:
    records = list(iter_records(data, TRANSCRIPT_MAGIC))
    if len(records) < 3 or [r[0] for r in records[:3]] != [b'H', b'R', b'W']:
        raise TranscriptFormatError("Transcript must start with H, R and W records")

    header = records[0][1]
    if len(header) != 64 + 5 * 32:
        raise TranscriptFormatError("Malformed transcript header")
    q = int(header[:64], 2)
    N, u, read_budget, write_budget, verified = uints_from_bits(header[64:])
    if q < 2 or N < 1 or u < 1:
        raise TranscriptFormatError(f"Invalid header values q={q}, N={N}, u={u}")
    sets = ReadWriteSets.of(N, uints_from_bits(records[1][1]), uints_from_bits(records[2][1]))

    transcript = Transcript(
        N=N, u=u, q=q, sets=sets,
        read_budget=optional_from(read_budget),
        write_budget=optional_from(write_budget),
        verified_count=optional_from(verified),
    )
    rest = records[3:]
    i = 0
    try:
        while i < len(rest):
            tag, bits = rest[i]
            if tag == b'A':
                if i + 1 >= len(rest) or rest[i + 1][0] != b'E':
                    raise TranscriptFormatError("AWTP record without its error record")
                sent = unflatten(decode_elements(bits, N * u, q), N, u)
                error = unflatten(decode_elements(rest[i + 1][1], N * u, q), N, u)
                received = tuple(
                    tuple((a + b) % q for a, b in zip(s, e)) for s, e in zip(sent, error)
                )
                transcript.invocations.append(AwtpInvocation(sent=sent, error=error, received=received))
                transcript.events.append((EventKind.AWTP, len(transcript.invocations) - 1))
                i += 2
            elif tag in PD_DIRECTIONS:
                seq = len(transcript.pd_messages)
                transcript.pd_messages.append(PdMessage(bits=bits, direction=PD_DIRECTIONS[tag], sequence=seq))
                transcript.events.append((EventKind.PD, seq))
                i += 1
            else:
                raise TranscriptFormatError(f"Unknown record tag {tag!r}")
    except ValueError as e:
        if isinstance(e, TranscriptFormatError):
            raise
        raise TranscriptFormatError(f"Corrupt transcript record: {e}") from e
    return transcript


def write_transcript(path: Union[str, Path], transcript: Transcript):
    Path(path).write_bytes(serialize_transcript(transcript))


def read_transcript(path: Union[str, Path]) -> Transcript:
    return deserialize_transcript(Path(path).read_bytes())
