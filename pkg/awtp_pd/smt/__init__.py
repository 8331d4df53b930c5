"""Correspondence between restricted AWTP-PD and one-way symmetric SMT-PD."""

from .wires import Wire, WireTranscript, awtp_to_smt, smt_to_awtp, smt_transmission_rate
from .profile import RateProfile, decode_from_wires, rate_profile
from .files import (
    serialize_wire_transcript,
    deserialize_wire_transcript,
    write_wire_transcript,
    read_wire_transcript,
)

__all__ = [
    'Wire',
    'WireTranscript',
    'awtp_to_smt',
    'smt_to_awtp',
    'smt_transmission_rate',
    'RateProfile',
    'decode_from_wires',
    'rate_profile',
    'serialize_wire_transcript',
    'deserialize_wire_transcript',
    'write_wire_transcript',
    'read_wire_transcript',
]
