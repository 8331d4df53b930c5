"""Adversary strategies and read/write set constructions."""

from .strategies import (
    AdversaryStrategy,
    PassiveStrategy,
    UniformErrorStrategy,
    SubstitutionStrategy,
    CallbackStrategy,
    passive,
    adv1_uniform,
    substitution,
)
from .partitions import PartitionMode, partition_sets
from .spec import AdversaryKind, AdversarySpec

__all__ = [
    'AdversaryStrategy',
    'PassiveStrategy',
    'UniformErrorStrategy',
    'SubstitutionStrategy',
    'CallbackStrategy',
    'passive',
    'adv1_uniform',
    'substitution',
    'PartitionMode',
    'partition_sets',
    'AdversaryKind',
    'AdversarySpec',
]
