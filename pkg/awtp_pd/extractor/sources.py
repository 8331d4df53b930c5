"""Symbol-fixing sources and the exhaustive zero-error check."""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple

import numpy as np

from ..ffield import FieldElement, PrimeModulus
from ..utils.errors import ExtractorError
from .reed_solomon import extract_ints

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SymbolFixingSource:
    """
    An (n, k) symbol-fixing source: positions in free_positions are uniform
    and independent, every other position holds a constant.
    """

    n: int
    free_positions: FrozenSet[int]
    modulus: PrimeModulus
    fixed_values: Dict[int, FieldElement] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        fixed = set(self.fixed_values)
        if fixed & set(self.free_positions):
            raise ExtractorError("A position cannot be both free and fixed")
        if fixed | set(self.free_positions) != set(range(self.n)):
            raise ExtractorError(f"Free and fixed positions must partition [0, {self.n})")
        if any(v.q != self.modulus.q for v in self.fixed_values.values()):
            raise ExtractorError("Fixed values must lie in the source's field")

    @property
    def free_count(self) -> int:
        return len(self.free_positions)

    @property
    def min_entropy_bits(self) -> float:
        return self.free_count * float(np.log2(self.modulus.q))

    def samples(self) -> Iterator[Tuple[int, ...]]:
        """Every one of the q^k equally likely source outputs, as int vectors."""
        base = [0] * self.n
        for position, value in self.fixed_values.items():
            base[position] = value.value
        free = sorted(self.free_positions)
        for assignment in itertools.product(range(self.modulus.q), repeat=len(free)):
            for position, value in zip(free, assignment):
                base[position] = value
            yield tuple(base)


def output_distribution(source: SymbolFixingSource, m: int) -> Counter:
    """Exact output histogram of Ext over all source samples."""
    q = source.modulus.q
    return Counter(tuple(extract_ints(sample, m, q)) for sample in source.samples())


def distance_from_uniform(histogram: Counter, m: int, q: int) -> Fraction:
    """Exact statistical distance between a histogram and the uniform law on F_q^m."""
    total = sum(histogram.values())
    cells = q ** m
    uniform = Fraction(1, cells)
    seen = sum(abs(Fraction(c, total) - uniform) for c in histogram.values())
    unseen = (cells - len(histogram)) * uniform
    return (seen + unseen) / 2


@dataclass(frozen=True)
class ExtractorCheckResult:
    q: int
    n: int
    m: int
    free_count: int
    sources_checked: int
    max_distance: Fraction

    @property
    def zero_error(self) -> bool:
        return self.max_distance == 0


def check_extractor_uniformity(q: int, n: int, m: int, free_count: int) -> ExtractorCheckResult:
    """
    Enumerate every source with free_count free positions and every fixed assignment,
    and record the largest distance of Ext's output from uniform.
    """
    modulus = PrimeModulus(q)
    if not m <= free_count <= n:
        raise ExtractorError(f"Free count {free_count} must lie in [m={m}, n={n}]")

    worst = Fraction(0)
    checked = 0
    for free in itertools.combinations(range(n), free_count):
        fixed_positions = [i for i in range(n) if i not in free]
        for values in itertools.product(range(q), repeat=len(fixed_positions)):
            source = SymbolFixingSource(
                n=n,
                free_positions=frozenset(free),
                fixed_values={p: FieldElement(v, modulus) for p, v in zip(fixed_positions, values)},
                modulus=modulus,
            )
            worst = max(worst, distance_from_uniform(output_distribution(source, m), m, q))
            checked += 1
    return ExtractorCheckResult(q=q, n=n, m=m, free_count=free_count, sources_checked=checked, max_distance=worst)


def extractor_uniformity_suite(q_values: Iterable[int] = (5, 7, 11), max_n: int = 3) -> List[ExtractorCheckResult]:
    """Run the zero-error check for every q, n <= max_n, 1 <= m <= n with n+m <= q."""
    results = []
    for q in q_values:
        for n in range(1, max_n + 1):
            for m in range(1, n + 1):
                if n + m > q:
                    continue
                for free_count in range(m, n + 1):
                    result = check_extractor_uniformity(q, n, m, free_count)
                    status = "✅" if result.zero_error else "❌"
                    logger.info(
                        f"{status} Extractor q={q} n={n} m={m} free={free_count}: "
                        f"{result.sources_checked} sources, max SD {result.max_distance}"
                    )
                    results.append(result)
    return results
