"""Arithmetic in the prime field F_q."""

from dataclasses import dataclass
from typing import Iterator, Union

from ..utils.errors import ConfigurationError, ModulusMismatchError, ZeroDivisionFieldError
from .primes import is_prime, protocol_threshold


@dataclass(frozen=True)
class PrimeModulus:
    """
    The prime q governing all arithmetic.

    Besides constructing FieldElement values, the modulus offers the same
    operations on plain ints in canonical range. The protocol's inner loops
    use those to avoid allocating an object per symbol.
    """

    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or isinstance(self.q, bool):
            raise ConfigurationError(f"Modulus must be an int, got {self.q!r}")
        if not is_prime(self.q):
            raise ConfigurationError(f"Modulus {self.q} is not prime")

    def __int__(self) -> int:
        return self.q

    @property
    def bit_width(self) -> int:
        """ceil(log2 q): the fixed width used when serialising elements."""
        return (self.q - 1).bit_length()

    def element(self, value: int) -> 'FieldElement':
        return FieldElement(value % self.q, self)

    def zero(self) -> 'FieldElement':
        return FieldElement(0, self)

    def one(self) -> 'FieldElement':
        return FieldElement(1, self)

    def elements(self) -> Iterator['FieldElement']:
        for value in range(self.q):
            yield FieldElement(value, self)

    def satisfies_protocol_bound(self, u: int, N: int) -> bool:
        return self.q > protocol_threshold(u, N)

    # Int-level operations
    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionFieldError(f"Zero has no inverse modulo {self.q}")
        return pow(a, -1, self.q)


Operand = Union['FieldElement', int]


@dataclass(frozen=True)
class FieldElement:
    """An element of F_q held as its least non-negative residue."""

    value: int
    modulus: PrimeModulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.q:
            raise ValueError(f"Value {self.value} outside [0, {self.modulus.q})")

    @property
    def q(self) -> int:
        return self.modulus.q

    def _coerce(self, other: Operand) -> int:
        if isinstance(other, FieldElement):
            if other.modulus.q != self.modulus.q:
                raise ModulusMismatchError(
                    f"Cannot combine elements of F_{self.modulus.q} and F_{other.modulus.q}"
                )
            return other.value
        if isinstance(other, int):
            return other % self.modulus.q
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Operand) -> 'FieldElement':
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement((self.value + b) % self.q, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: Operand) -> 'FieldElement':
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement((self.value - b) % self.q, self.modulus)

    def __rsub__(self, other: Operand) -> 'FieldElement':
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement((b - self.value) % self.q, self.modulus)

    def __mul__(self, other: Operand) -> 'FieldElement':
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement((self.value * b) % self.q, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> 'FieldElement':
        return FieldElement((-self.value) % self.q, self.modulus)

    def __truediv__(self, other: Operand) -> 'FieldElement':
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self * FieldElement(b, self.modulus).inverse()

    def __pow__(self, exponent: int) -> 'FieldElement':
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FieldElement(pow(self.value, exponent, self.q), self.modulus)

    def inverse(self) -> 'FieldElement':
        return FieldElement(self.modulus.inv(self.value), self.modulus)

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.q})"


def _check(a: FieldElement, b: FieldElement):
    if a.modulus.q != b.modulus.q:
        raise ModulusMismatchError(f"Cannot combine elements of F_{a.q} and F_{b.q}")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    """Multiplicative inverse; raises ZeroDivisionFieldError for zero."""
    return a.inverse()
