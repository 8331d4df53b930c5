"""
Seedless extractor for symbol-fixing sources built from Reed-Solomon codes.

The input x = (x_0, ..., x_{n-1}) is read as evaluations of the unique
polynomial f of degree <= n-1 at the points 0..n-1; the output is
(f(n), ..., f(n+m-1)).
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..ffield import FieldElement, PrimeModulus
from ..utils.errors import ExtractorError, ModulusMismatchError


@dataclass(frozen=True)
class ExtractorParams:
    n: int
    m: int
    modulus: PrimeModulus

    def __post_init__(self):
        if self.n < 1:
            raise ExtractorError(f"Extractor input length must be positive, got {self.n}")
        if not 0 <= self.m <= self.n:
            raise ExtractorError(f"Output length {self.m} must lie in [0, n={self.n}]")
        if self.modulus.q < self.n + self.m:
            raise ExtractorError(
                f"q={self.modulus.q} is smaller than n+m={self.n + self.m}"
            )

    @property
    def output_abscissae(self) -> range:
        return range(self.n, self.n + self.m)


def _poly_mul_linear(poly: List[int], root: int, q: int) -> List[int]:
    """poly(X) * (X - root)"""
    out = [0] * (len(poly) + 1)
    for i, c in enumerate(poly):
        out[i] = (out[i] - c * root) % q
        out[i + 1] = (out[i + 1] + c) % q
    return out


def interpolate_ints(xs: Sequence[int], ys: Sequence[int], q: int) -> List[int]:
    """Lagrange interpolation; coefficients listed lowest degree first, length len(xs)."""
    if len(set(x % q for x in xs)) != len(xs):
        raise ExtractorError("Interpolation abscissae must be distinct")
    n = len(xs)
    if n > q:
        raise ExtractorError(f"Cannot interpolate {n} points over F_{q}")

    # Master numerator (X - x_0)...(X - x_{n-1})
    master = [1]
    for x in xs:
        master = _poly_mul_linear(master, x, q)

    coeffs = [0] * n
    for j, (xj, yj) in enumerate(zip(xs, ys)):
        if yj % q == 0:
            continue
        # Synthetic division of master by (X - x_j)
        quotient = [0] * n
        carry = 0
        for i in range(n, 0, -1):
            carry = (master[i] + carry * xj) % q
            quotient[i - 1] = carry
        denominator = 1
        for k, xk in enumerate(xs):
            if k != j:
                denominator = denominator * (xj - xk) % q
        scale = yj * pow(denominator, -1, q) % q
        for i in range(n):
            coeffs[i] = (coeffs[i] + quotient[i] * scale) % q
    return coeffs


def interpolate(points: Sequence[Tuple[FieldElement, FieldElement]]) -> List[FieldElement]:
    """
    Unique polynomial of degree <= n-1 through n points with distinct abscissae.

    Args:
        points: (x, y) pairs over a single field

    Returns:
        Coefficients f_0..f_{n-1} as field elements (lowest degree first)
    """
    if not points:
        raise ExtractorError("Interpolation needs at least one point")
    modulus = points[0][0].modulus
    if any(x.q != modulus.q or y.q != modulus.q for x, y in points):
        raise ModulusMismatchError("Interpolation points mix different fields")
    coeffs = interpolate_ints([x.value for x, _ in points], [y.value for _, y in points], modulus.q)
    return [FieldElement(c, modulus) for c in coeffs]


def evaluate_ints(coeffs: Sequence[int], z: int, q: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * z + c) % q
    return acc


def evaluate(coeffs: Sequence[FieldElement], z: FieldElement) -> FieldElement:
    return FieldElement(evaluate_ints([c.value for c in coeffs], z.value, z.q), z.modulus)


def _lagrange_weights(n: int, q: int) -> List[int]:
    """1 / prod_{k != j} (j - k) for the consecutive abscissae 0..n-1."""
    fact = [1] * (n + 1)
    for i in range(1, n + 1):
        fact[i] = fact[i - 1] * i % q
    weights = []
    for j in range(n):
        denom = fact[j] * fact[n - 1 - j] % q
        if (n - 1 - j) % 2:
            denom = (-denom) % q
        weights.append(pow(denom, -1, q))
    return weights


def extract_ints(xs: Sequence[int], m: int, q: int) -> List[int]:
    """
    Evaluate the interpolant of xs (at 0..n-1) at n..n+m-1.

    Each output point z uses prefix and suffix products of (z - k), so the
    only inversions are the n fixed Lagrange weights.
    """
    n = len(xs)
    if n == 0:
        _empty_input(m)
    if m > n or q < n + m:
        raise ExtractorError(f"Cannot extract m={m} from n={n} symbols over F_{q}: need m <= n and q >= n+m")
    weights = _lagrange_weights(n, q)

    outputs = []
    for z in range(n, n + m):
        prefix = [1] * (n + 1)
        for k in range(n):
            prefix[k + 1] = prefix[k] * (z - k) % q
        suffix = 1
        total = 0
        for j in range(n - 1, -1, -1):
            total = (total + xs[j] * weights[j] % q * prefix[j] % q * suffix) % q
            suffix = suffix * (z - j) % q
        outputs.append(total)
    return outputs


def _empty_input(m: int):
    raise ExtractorError(f"Cannot extract {m} symbols from an empty input")


def extract(x: Sequence[FieldElement], m: int) -> List[FieldElement]:
    """
    Ext(x) = (f(n), ..., f(n+m-1)) for the degree <= n-1 interpolant of x at 0..n-1.

    Raises:
        ExtractorError: if q < n + m or m > n
    """
    if not x:
        _empty_input(m)
    modulus = x[0].modulus
    if any(v.q != modulus.q for v in x):
        raise ModulusMismatchError("Extractor input mixes different fields")
    return [FieldElement(v, modulus) for v in extract_ints([v.value for v in x], m, modulus.q)]


def rs_extend(x: Sequence[FieldElement], m: int) -> List[FieldElement]:
    """The Reed-Solomon codeword x || Ext(x)."""
    return list(x) + extract(x, m)
