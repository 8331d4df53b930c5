"""The three-message-round AWTP-PD protocol."""

from .config import ProtocolConfig
from .state import Message, AliceState, BobState
from .rounds import (
    PROTOCOL_MESSAGE_ROUNDS,
    ProtocolTapes,
    round1_alice,
    round2_bob,
    round3_alice,
    decode_bob,
    run_protocol,
)

__all__ = [
    'ProtocolConfig',
    'Message',
    'AliceState',
    'BobState',
    'PROTOCOL_MESSAGE_ROUNDS',
    'ProtocolTapes',
    'round1_alice',
    'round2_bob',
    'round3_alice',
    'decode_bob',
    'run_protocol',
]
