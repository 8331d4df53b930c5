"""
The three message rounds of the AWTP-PD protocol and Bob's decoder.

Round 1 (AWTP, Alice): c_i = (r_i, beta_i) uniform in F_q^u.
Round 2 (PD, Bob):     d1 = (alpha_i, t_i = hash_alpha_i(r'_i) + beta'_i).
Round 3 (PD, Alice):   v_i = [hash_alpha_i(r_i) + beta_i == t_i],
                       k = Ext(r_i1 || ... || r_is), d2 = (k + m, v).
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from ..adversary import AdversaryStrategy
from ..channels import (
    Codeword,
    Direction,
    PdMessage,
    Transcript,
    awtp_transmit,
    decode_d1,
    decode_d2,
    encode_d1,
    encode_d2,
    pd_send,
)
from ..extractor import extract_ints
from ..hashfam import hash_ints
from ..utils.errors import InsufficientEntropyError, MalformedMessageError, StrategyViolationError
from ..utils.tapes import RandomTape
from .config import ProtocolConfig
from .state import AliceState, BobState, Message

logger = logging.getLogger(__name__)

PROTOCOL_MESSAGE_ROUNDS = 3


def _bits(d: Union[PdMessage, str]) -> str:
    return d.bits if isinstance(d, PdMessage) else d


def _extract_key(components: Sequence[Tuple[int, ...]], v: Sequence[int], config: ProtocolConfig) -> List[int]:
    """Ext over the r-parts of the components selected by v, keyed to length l."""
    selected = [x for symbol, keep in zip(components, v) if keep for x in symbol]
    s = sum(v)
    if len(selected) < config.message_length:
        raise InsufficientEntropyError(
            f"Insufficient verified entropy: (u-1)s = {(config.u - 1) * s} < l = {config.message_length}"
        )
    return extract_ints(selected, config.message_length, config.q)


def round1_alice(state: AliceState) -> Codeword:
    """Draw every (r_i, beta_i) from Alice's tape and return the codeword."""
    config = state.config
    u = config.u
    coords = state.tape.draw(u * config.N)
    codeword = tuple(tuple(coords[i * u:(i + 1) * u]) for i in range(config.N))
    state.r = [symbol[:-1] for symbol in codeword]
    state.beta = [symbol[-1] for symbol in codeword]
    state.codeword = codeword
    return codeword


def round2_bob(state: BobState, y: Codeword) -> PdMessage:
    """Pick hash keys alpha_i and tag Bob's received components."""
    config = state.config
    if len(y) != config.N:
        raise MalformedMessageError(f"Received {len(y)} components, expected N={config.N}")
    q = config.q
    state.received = tuple(y)
    state.alphas = state.tape.draw(config.N)
    state.tags = [
        (hash_ints(alpha, r, q) + beta) % q
        for alpha, r, beta in zip(state.alphas, state.r_prime, state.beta_prime)
    ]
    return PdMessage(bits=encode_d1(state.alphas, state.tags, q), direction=Direction.BOB_TO_ALICE)


def round3_alice(state: AliceState, d1: Union[PdMessage, str]) -> PdMessage:
    """
    Verify every component against Bob's tags, extract the key from the
    verified r_i and send (k + m, v).

    Raises:
        InsufficientEntropyError: if (u-1)s < l
    """
    config = state.config
    q = config.q
    alphas, tags = decode_d1(_bits(d1), config.N, q)
    state.v = [
        int((hash_ints(alpha, r, q) + beta) % q == t)
        for alpha, r, beta, t in zip(alphas, state.r, state.beta, tags)
    ]
    state.key = _extract_key(state.r, state.v, config)
    ciphertext = [(k + m) % q for k, m in zip(state.key, state.message.values)]
    return PdMessage(bits=encode_d2(ciphertext, state.v, q), direction=Direction.ALICE_TO_BOB)


def decode_bob(state: BobState, d2: Union[PdMessage, str]) -> Message:
    """m'_i = c_i - k'_i with k' extracted from Bob's r'_i selected by v."""
    config = state.config
    q = config.q
    if state.received is None:
        raise MalformedMessageError("Bob has not received a codeword yet")
    ciphertext, v = decode_d2(_bits(d2), config.message_length, config.N, q)
    state.v = v
    state.key = _extract_key(state.r_prime, v, config)
    state.output = Message(tuple((c - k) % q for c, k in zip(ciphertext, state.key)), q)
    return state.output


@dataclass
class ProtocolTapes:
    alice: RandomTape
    bob: RandomTape


def run_protocol(
    config: ProtocolConfig,
    message: Message,
    adversary: AdversaryStrategy,
    tapes: ProtocolTapes,
    transcript: Optional[Transcript] = None,
) -> Tuple[Message, Transcript]:
    """
    Execute round 1 (AWTP), round 2 (PD Bob->Alice), round 3 (PD Alice->Bob)
    and Bob's decoding.

    Returns:
        Bob's output m' and the full transcript
    """
    sets = adversary.sets
    if sets.N != config.N:
        raise StrategyViolationError(f"Adversary sets are over [{sets.N}], protocol uses N={config.N}")
    if not sets.within_budget(config.read_budget, config.write_budget, config.union_budget):
        raise StrategyViolationError(
            f"Adversary sets |S_r|={len(sets.S_r)}, |S_w|={len(sets.S_w)}, |S_r u S_w|={len(sets.union)} "
            f"exceed budgets ({config.read_budget}, {config.write_budget}, {config.union_budget})"
        )
    if transcript is None:
        transcript = Transcript(
            N=config.N, u=config.u, q=config.q, sets=sets,
            read_budget=config.read_budget, write_budget=config.write_budget,
        )

    alice = AliceState(config=config, message=message, tape=tapes.alice)
    bob = BobState(config=config, tape=tapes.bob)

    c = round1_alice(alice)
    y = awtp_transmit(c, sets, adversary, transcript)

    d1 = round2_bob(bob, y)
    pd_send(d1.bits, d1.direction, transcript)

    d2 = round3_alice(alice, d1)
    pd_send(d2.bits, d2.direction, transcript)

    transcript.verified_count = sum(alice.v)
    m_prime = decode_bob(bob, d2)
    return m_prime, transcript
