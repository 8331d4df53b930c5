"""Prime-field arithmetic and protocol prime selection."""

from .field import PrimeModulus, FieldElement, add, sub, mul, neg, inv
from .primes import is_prime, select_prime, protocol_threshold

__all__ = [
    'PrimeModulus',
    'FieldElement',
    'add',
    'sub',
    'mul',
    'neg',
    'inv',
    'is_prime',
    'select_prime',
    'protocol_threshold',
]
