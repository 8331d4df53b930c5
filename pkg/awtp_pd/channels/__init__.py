"""Simulated AWTP and public-discussion channels with transcript recording."""

from .types import (
    Symbol,
    Codeword,
    Party,
    Direction,
    EventKind,
    ReadWriteSets,
    PdMessage,
    AwtpInvocation,
    Transcript,
)
from .channel import ChannelAdversary, awtp_transmit, pd_send
from .codec import (
    element_width,
    encode_elements,
    decode_elements,
    encode_d1,
    decode_d1,
    encode_d2,
    decode_d2,
)
from .records import (
    pack_record,
    iter_records,
    serialize_transcript,
    deserialize_transcript,
    write_transcript,
    read_transcript,
)

__all__ = [
    'Symbol',
    'Codeword',
    'Party',
    'Direction',
    'EventKind',
    'ReadWriteSets',
    'PdMessage',
    'AwtpInvocation',
    'Transcript',
    'ChannelAdversary',
    'awtp_transmit',
    'pd_send',
    'element_width',
    'encode_elements',
    'decode_elements',
    'encode_d1',
    'decode_d1',
    'encode_d2',
    'decode_d2',
    'pack_record',
    'iter_records',
    'serialize_transcript',
    'deserialize_transcript',
    'write_transcript',
    'read_transcript',
]
