"""
Bit layouts for public-discussion payloads.

Every field element is a fixed-width big-endian string of ceil(log2 q) bits.
d1 = alpha_1..alpha_N || t_1..t_N
d2 = c_1..c_l || v_1..v_N   (v as raw bits)
"""

from typing import List, Sequence, Tuple

from ..utils.errors import MalformedMessageError


def element_width(q: int) -> int:
    return (q - 1).bit_length()


def encode_elements(values: Sequence[int], q: int) -> str:
    width = element_width(q)
    return ''.join(format(v, f'0{width}b') for v in values)


def decode_elements(bits: str, count: int, q: int) -> List[int]:
    width = element_width(q)
    if len(bits) != count * width:
        raise MalformedMessageError(f"Expected {count * width} bits for {count} elements, got {len(bits)}")
    if any(b not in '01' for b in bits):
        raise MalformedMessageError("Payload is not a binary string")
    values = [int(bits[i:i + width], 2) for i in range(0, len(bits), width)]
    if any(v >= q for v in values):
        raise MalformedMessageError(f"Encoded value out of range for F_{q}")
    return values


def encode_d1(alphas: Sequence[int], tags: Sequence[int], q: int) -> str:
    return encode_elements(alphas, q) + encode_elements(tags, q)


def decode_d1(bits: str, N: int, q: int) -> Tuple[List[int], List[int]]:
    """Split d1 into (alphas, tags)."""
    values = decode_elements(bits, 2 * N, q)
    return values[:N], values[N:]


def encode_d2(ciphertext: Sequence[int], v: Sequence[int], q: int) -> str:
    return encode_elements(ciphertext, q) + ''.join('1' if b else '0' for b in v)


def decode_d2(bits: str, ell: int, N: int, q: int) -> Tuple[List[int], List[int]]:
    """Split d2 into (ciphertext, v)."""
    width = element_width(q)
    expected = ell * width + N
    if len(bits) != expected:
        raise MalformedMessageError(f"d2 must carry {expected} bits (l={ell}, N={N}), got {len(bits)}")
    cut = ell * width
    ciphertext = decode_elements(bits[:cut], ell, q)
    tail = bits[cut:]
    if any(b not in '01' for b in tail):
        raise MalformedMessageError("Verification vector is not binary")
    return ciphertext, [int(b) for b in tail]
