"""Closed-form bounds: AWTP-PD capacity, two-round reliability and SMT-PD transmission rates."""

import math
from enum import Enum
from typing import Optional

import pandas as pd
from pydantic import BaseModel, Field, model_validator

from ..utils.errors import ConfigurationError
from .measures import binary_entropy

BISECTION_TOLERANCE = 1e-9


class BoundsQuery(BaseModel):
    """Inputs for the bound calculators; each formula reads the subset it needs."""

    rho_r: float = Field(default=0.0, ge=0, le=1)
    rho_w: float = Field(default=0.0, ge=0, le=1)
    rho: Optional[float] = Field(default=None, ge=0, le=1)
    epsilon: float = Field(default=0.0, ge=0, le=1)
    delta: float = Field(default=0.0, ge=0, le=1)
    n: float = Field(default=0.0, ge=0, description="total public-discussion bits")
    sigma_size: float = Field(default=2.0, gt=1, description="|Sigma|, or the wire alphabet |W|")
    N: Optional[int] = Field(default=None, ge=1)
    t: Optional[int] = Field(default=None, ge=0)
    message_space_size: Optional[float] = Field(default=None, ge=1)
    xi: Optional[float] = Field(default=None, gt=0)
    N0: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode='after')
    def _fill_rho(self) -> 'BoundsQuery':
        if self.rho is None:
            self.rho = min(1.0, self.rho_r + self.rho_w)
        return self

    @property
    def message_bits(self) -> float:
        if self.message_space_size is None:
            raise ConfigurationError("This bound needs |M|")
        return math.log2(self.message_space_size)


class TrVariant(str, Enum):
    EPSEC = "epsec"
    PERF = "perf"
    GGO10 = "ggo10"


class ComparisonProtocol(str, Enum):
    SHI = "shi"
    GARAY1 = "garay1"
    GARAY2 = "garay2"
    AWTP_PD = "awtp_pd"


GARAY2_CONSTANT = 1 / 3


def _epsilon_term(epsilon: float, alphabet_size: float) -> float:
    """eps * (1 + log_{|A|}(1/eps)); the eps -> 0 limit is 0."""
    if epsilon == 0:
        return 0.0
    return epsilon * (1 + math.log(1 / epsilon, alphabet_size))


def rate_upper_bound(query: BoundsQuery) -> float:
    """C^eps <= 1 - rho + 2*eps*(1 + log_|Sigma|(1/eps)) + 2*eps*n."""
    return 1 - query.rho + 2 * _epsilon_term(query.epsilon, query.sigma_size) + 2 * query.epsilon * query.n


def min_delta_two_round(message_space_size: float) -> float:
    """
    Smallest delta in [0, 1/2] with 2H(delta) >= 1 - 1/|M|, by bisection.

    ``math.inf`` gives the large-message limit H(delta) >= 1/2.
    """
    if message_space_size <= 1:
        return 0.0
    target = (1 - 1 / message_space_size) / 2
    lo, hi = 0.0, 0.5
    while hi - lo > BISECTION_TOLERANCE:
        mid = (lo + hi) / 2
        if binary_entropy(mid) >= target:
            hi = mid
        else:
            lo = mid
    return hi


def _require_wires(query: BoundsQuery):
    if query.N is None or query.t is None:
        raise ConfigurationError("Transmission-rate bounds need N and t")
    if not query.N > query.t:
        raise ConfigurationError(f"Need N > t, got N={query.N}, t={query.t}")
    return query.N, query.t


def epsilon_prime(query: BoundsQuery) -> float:
    """eps' = 2N*eps*(1 + log_|W|(1/eps)) + 2*eps*n*N."""
    N, _ = _require_wires(query)
    return 2 * N * _epsilon_term(query.epsilon, query.sigma_size) + 2 * query.epsilon * query.n * N


def smt_tr_lower_bound(query: BoundsQuery, variant: TrVariant) -> float:
    """
    Lower bounds on the transmission rate of a one-way symmetric SMT-PD protocol:

    epsec: N / (N - t + eps' + 2H(delta)N + delta*n*N)
    perf:  N / (N - t + 2H(delta)N + delta*n*N)
    ggo10: N * (-log(1/|M| + 2eps) - H(sqrt delta) - 2m*sqrt delta) / ((N - t) m),  m = log |M|
    """
    variant = TrVariant(variant)
    N, t = _require_wires(query)
    h_delta = binary_entropy(query.delta)

    if variant is TrVariant.GGO10:
        m = query.message_bits
        if m <= 0:
            raise ConfigurationError("ggo10 bound needs |M| > 1")
        root = math.sqrt(query.delta)
        inner = 1 / query.message_space_size + 2 * query.epsilon
        numerator = N * (-math.log2(inner) - binary_entropy(root) - 2 * m * root)
        return numerator / ((N - t) * m)

    denominator = N - t + 2 * h_delta * N + query.delta * query.n * N
    if variant is TrVariant.EPSEC:
        denominator += epsilon_prime(query)
    if denominator <= 0:
        raise ConfigurationError(f"Non-positive denominator {denominator} in {variant.value} bound")
    return N / denominator


def comparison_rate(protocol: ComparisonProtocol, t: int, N: int, xi: float) -> float:
    """
    Information rate of each compared protocol: 1 - t/N - xi for the
    rate-optimal rows, c(1 - t/N) with c = 1/3 (its upper limit) for protocol II.
    """
    protocol = ComparisonProtocol(protocol)
    if not 0 <= t < N:
        raise ConfigurationError(f"Need 0 <= t < N, got t={t}, N={N}")
    if xi < 0:
        raise ConfigurationError(f"xi must be non-negative, got {xi}")
    if protocol is ComparisonProtocol.GARAY2:
        return garay_protocol2_rate_bound(t, N)
    return 1 - t / N - xi


def garay_protocol1_rate(t: int, n: int, xi: float) -> float:
    """
    Finite-n information rate m / (n/(1-D) * (m/(n-t) + lambda)) of protocol I
    with lambda = n^2/xi, D = xi and m = n^2 (n-t) / xi^2.
    """
    if not 0 <= t < n or not 0 < xi < 1:
        raise ConfigurationError(f"Need 0 <= t < n and 0 < xi < 1, got t={t}, n={n}, xi={xi}")
    lam = n * n / xi
    m = n * n * (n - t) / (xi * xi)
    return m / (n / (1 - xi) * (m / (n - t) + lam))


def garay_protocol1_error(t: int, n: int, xi: float) -> float:
    """Decoding error t(1 - D)^lambda of protocol I for the same parameter choice."""
    return t * (1 - xi) ** (n * n / xi)


def garay_protocol2_rate_bound(t: int, n: int) -> float:
    """(1/3)(1 - t/n): protocol II spends N = 2K extra wire symbols per K."""
    return GARAY2_CONSTANT * (1 - t / n)


COMPARISON_PROFILE = {
    ComparisonProtocol.SHI: ("1 SMT + 2 PD", "S_r = S_w, rho <= 1", "log|M|"),
    ComparisonProtocol.GARAY1: ("1 SMT + 2 PD", "S_r = S_w, rho <= 1", "log|M|"),
    ComparisonProtocol.GARAY2: ("2 SMT + 2 PD", "S_r = S_w, rho <= 1", "log log|M|"),
    ComparisonProtocol.AWTP_PD: ("1 SMT + 2 PD", "rho <= 1", "log|M|"),
}


def comparison_rows(t: int, N: int, xi: float) -> pd.DataFrame:
    """The four comparison rows with round structure, set restriction, PD traffic order and rates."""
    rows = []
    for protocol in ComparisonProtocol:
        rounds, sets, pd_order = COMPARISON_PROFILE[protocol]
        rows.append({
            'protocol': protocol.value,
            'message_rounds': rounds,
            'read_write_sets': sets,
            'pd_communication': pd_order,
            'info_rate': comparison_rate(protocol, t, N, xi),
            'transmission_rate_order': N / (N - t),
        })
    return pd.DataFrame(rows)
