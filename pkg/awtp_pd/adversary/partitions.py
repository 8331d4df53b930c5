"""Read/write structures built from an explicit partition S_a, S_b, S_c, S_d of [N]."""

from enum import Enum
from typing import Iterable

from ..channels import ReadWriteSets
from ..utils.errors import ConfigurationError


class PartitionMode(str, Enum):
    ADV2 = "adv2"
    ADV2_HAT = "adv2hat"


def partition_sets(
    N: int,
    mode: PartitionMode,
    S_a: Iterable[int],
    S_b: Iterable[int],
    S_c: Iterable[int],
    S_d: Iterable[int],
) -> ReadWriteSets:
    """
    adv2:    S_r = S_a | S_b,  S_w = S_b | S_c
    adv2hat: S_r = S_a | S_d,  S_w = S_c | S_d

    The two adversaries are paired (rho_r = 1 - rho_w), so |S_b| must equal |S_d|.
    """
    mode = PartitionMode(mode)
    parts = [frozenset(S_a), frozenset(S_b), frozenset(S_c), frozenset(S_d)]
    a, b, c, d = parts

    total = sum(len(p) for p in parts)
    union = a | b | c | d
    if total != len(union) or union != frozenset(range(N)):
        raise ConfigurationError(f"S_a, S_b, S_c, S_d must partition [0, {N})")
    if len(b) != len(d):
        raise ConfigurationError(f"Paired construction needs |S_b| = |S_d|, got {len(b)} and {len(d)}")

    if mode is PartitionMode.ADV2:
        return ReadWriteSets(N, a | b, b | c)
    return ReadWriteSets(N, a | d, c | d)
