"""Distributions, statistical distance and entropy measures (all logs base 2)."""

import math
from collections import Counter
from fractions import Fraction
from typing import Any, Dict, Hashable, Iterable, Mapping, Sequence

import numpy as np

NORMALIZATION_TOLERANCE = 1e-12


class Distribution:
    """A finite probability distribution."""

    def __init__(self, support: Sequence[Hashable], probabilities: Sequence[float]):
        if len(support) != len(probabilities):
            raise ValueError("Support and probabilities differ in length")
        if len(set(support)) != len(support):
            raise ValueError("Support values must be distinct")
        probs = np.asarray(probabilities, dtype=float)
        if probs.size and probs.min() < 0:
            raise ValueError("Probabilities must be non-negative")
        if abs(probs.sum() - 1.0) > NORMALIZATION_TOLERANCE:
            raise ValueError(f"Probabilities sum to {probs.sum()!r}, not 1")
        self.support = list(support)
        self.probabilities = probs

    @classmethod
    def from_counts(cls, counts: Mapping[Hashable, int]) -> 'Distribution':
        total = sum(counts.values())
        if total <= 0:
            raise ValueError("Counts must contain positive mass")
        support = list(counts)
        return cls(support, [counts[x] / total for x in support])

    @classmethod
    def uniform(cls, support: Iterable[Hashable]) -> 'Distribution':
        support = list(support)
        return cls(support, [1.0 / len(support)] * len(support))

    @classmethod
    def point_mass(cls, value: Hashable) -> 'Distribution':
        return cls([value], [1.0])

    def as_dict(self) -> Dict[Any, float]:
        return dict(zip(self.support, self.probabilities.tolist()))

    def prob(self, value: Hashable) -> float:
        return self.as_dict().get(value, 0.0)

    def __len__(self) -> int:
        return len(self.support)


def statistical_distance(p: Distribution, q: Distribution) -> float:
    """SD(P, Q) = 1/2 * sum_x |P(x) - Q(x)| over the union of supports."""
    pd, qd = p.as_dict(), q.as_dict()
    support = list(pd.keys() | qd.keys())
    a = np.array([pd.get(x, 0.0) for x in support])
    b = np.array([qd.get(x, 0.0) for x in support])
    return float(min(1.0, 0.5 * np.abs(a - b).sum()))


def statistical_distance_exact(counts1: Mapping[Hashable, int], counts2: Mapping[Hashable, int]) -> Fraction:
    """Exact SD between two empirical distributions given as counts."""
    n1, n2 = sum(counts1.values()), sum(counts2.values())
    if n1 <= 0 or n2 <= 0:
        raise ValueError("Counts must contain positive mass")
    total = sum(
        abs(Fraction(counts1.get(x, 0), n1) - Fraction(counts2.get(x, 0), n2))
        for x in counts1.keys() | counts2.keys()
    )
    return total / 2


def shannon_entropy(d: Distribution) -> float:
    p = d.probabilities[d.probabilities > 0]
    return float(-(p * np.log2(p)).sum()) + 0.0


def min_entropy(d: Distribution) -> float:
    return float(-np.log2(d.probabilities.max())) + 0.0


def binary_entropy(p: float) -> float:
    """H(p) = -p log p - (1-p) log (1-p), with H(0) = H(1) = 0."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Binary entropy argument {p} outside [0, 1]")
    if p in (0.0, 1.0):
        return 0.0
    return -p * math.log2(p) - (1 - p) * math.log2(1 - p)


def mutual_information_bound(epsilon: float, N: int, sigma_size: int, pd_bits: int) -> float:
    """Upper bound 2*eps*N*log(|Sigma|/eps) + 2*eps*n on I(M; V_E) for an eps-secret protocol."""
    if epsilon == 0:
        return 0.0
    return 2 * epsilon * N * math.log2(sigma_size / epsilon) + 2 * epsilon * pd_bits


def fano_bound(delta: float, message_space_size: int) -> float:
    """H(M | decoder output) <= H(delta) + delta * log |M|."""
    return binary_entropy(delta) + delta * math.log2(message_space_size)


def one_round_awtp_rate(rho_r: float, rho_w: float) -> float:
    """Rate achievable with a single AWTP codeword and no public discussion."""
    return max(0.0, 1.0 - float(rho_r) - float(rho_w))


def counts_of(values: Iterable[Hashable]) -> Counter:
    return Counter(values)
