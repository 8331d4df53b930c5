"""
Polynomial (u/q)-Delta-universal hash family over F_q.

hash_alpha(x) = x_1*alpha + x_2*alpha^2 + ... + x_u*alpha^u  (no constant term)
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

from ..ffield import FieldElement, PrimeModulus
from ..utils.errors import HashInputError, ModulusMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HashKey:
    alpha: FieldElement


@dataclass(frozen=True)
class HashInput:
    """A vector x of 1 <= u' <= q-1 elements of one field."""

    values: Tuple[FieldElement, ...]

    def __post_init__(self):
        if not self.values:
            raise HashInputError("Hash input must contain at least one element")
        q = self.values[0].q
        if any(v.q != q for v in self.values):
            raise ModulusMismatchError("Hash input mixes elements of different fields")
        if len(self.values) > q - 1:
            raise HashInputError(f"Hash input length {len(self.values)} exceeds q-1 = {q - 1}")

    @classmethod
    def of(cls, values: Union['HashInput', Sequence[FieldElement]]) -> 'HashInput':
        if isinstance(values, HashInput):
            return values
        return cls(tuple(values))

    @property
    def modulus(self) -> PrimeModulus:
        return self.values[0].modulus

    def __len__(self) -> int:
        return len(self.values)

    def ints(self) -> Tuple[int, ...]:
        return tuple(v.value for v in self.values)


def hash_ints(alpha: int, xs: Sequence[int], q: int) -> int:
    """Horner evaluation with alpha factored out: alpha*(x1 + alpha*(x2 + ...))."""
    acc = 0
    for x in reversed(xs):
        acc = (acc * alpha + x) % q
    return acc * alpha % q


def universal_hash(key: HashKey, x: Union[HashInput, Sequence[FieldElement]]) -> FieldElement:
    """
    Evaluate hash_alpha(x).

    Args:
        key: hash key holding alpha
        x: input vector of length 1..q-1 over the key's field

    Returns:
        The tag as a FieldElement
    """
    hx = HashInput.of(x)
    if hx.modulus.q != key.alpha.q:
        raise ModulusMismatchError(f"Key is over F_{key.alpha.q} but input is over F_{hx.modulus.q}")
    return FieldElement(hash_ints(key.alpha.value, hx.ints(), key.alpha.q), key.alpha.modulus)


def _difference_values(diff: Sequence[int], q: int) -> List[int]:
    """hash_alpha(diff) for every alpha in F_q."""
    return [hash_ints(alpha, diff, q) for alpha in range(q)]


def collision_count(
    x1: Union[HashInput, Sequence[FieldElement]],
    x2: Union[HashInput, Sequence[FieldElement]],
    t: FieldElement,
) -> int:
    """Number of keys alpha with hash_alpha(x1) - hash_alpha(x2) = t."""
    h1, h2 = HashInput.of(x1), HashInput.of(x2)
    if len(h1) != len(h2):
        raise HashInputError(f"Inputs differ in length: {len(h1)} vs {len(h2)}")
    q = h1.modulus.q
    if h2.modulus.q != q or t.q != q:
        raise ModulusMismatchError("Collision count mixes elements of different fields")
    if h1.ints() == h2.ints():
        raise HashInputError("Collision count requires distinct inputs")

    # hash is linear in x, so only the difference matters
    diff = [(a - b) % q for a, b in zip(h1.ints(), h2.ints())]
    return sum(1 for value in _difference_values(diff, q) if value == t.value)


@dataclass(frozen=True)
class DeltaUniversalityResult:
    q: int
    length: int
    max_collisions: int
    pairs_checked: int

    @property
    def bound(self) -> int:
        return self.length

    @property
    def holds(self) -> bool:
        return self.max_collisions <= self.length

    @property
    def attained(self) -> bool:
        return self.max_collisions == self.length


def check_delta_universality(q: int, length: int) -> DeltaUniversalityResult:
    """
    Exhaustively compute max over (x1 != x2, t) of collision_count for one (q, u').

    Every pair with the same nonzero difference vector has the same collision
    profile, so the search runs over the q^u' - 1 nonzero differences.
    """
    modulus = PrimeModulus(q)
    if not 1 <= length <= q - 1:
        raise HashInputError(f"Input length {length} outside [1, {q - 1}]")

    worst = 0
    for diff in itertools.product(range(modulus.q), repeat=length):
        if not any(diff):
            continue
        counts = Counter(_difference_values(diff, q))
        worst = max(worst, max(counts.values()))

    pairs = (q ** length) * (q ** length - 1)
    return DeltaUniversalityResult(q=q, length=length, max_collisions=worst, pairs_checked=pairs)


def delta_universality_suite(
    q_values: Iterable[int] = (5, 7, 11),
    lengths: Iterable[int] = (1, 2, 3),
) -> List[DeltaUniversalityResult]:
    """Run check_delta_universality over a grid of fields and input lengths."""
    results = []
    lengths = list(lengths)
    for q in q_values:
        for length in lengths:
            if length > q - 1:
                continue
            result = check_delta_universality(q, length)
            status = "✅" if result.holds else "❌"
            logger.info(f"{status} Delta-universality q={q} u'={length}: max collisions {result.max_collisions}")
            results.append(result)
    return results
