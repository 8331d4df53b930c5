"""Protocol parameters: the single source of parameter truth."""

import logging
import math
from fractions import Fraction
from functools import cached_property
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, field_serializer, field_validator, model_validator

from ..ffield import PrimeModulus, is_prime, protocol_threshold, select_prime
from ..utils.config_manager import parse_rational
from ..utils.errors import ConfigurationError

logger = logging.getLogger(__name__)


def _floor(value: Fraction) -> int:
    return math.floor(value)


class ProtocolConfig(BaseModel):
    """
    Parameters (N, u, q, rho_r, rho_w, rho, l) of one protocol instance.

    ``q`` defaults to the smallest prime above 2uN^2, ``rho`` to
    min(1, rho_r + rho_w) and ``message_length`` to floor((u-1)(1-rho)N).
    With ``enforce_constraints=False`` the q > 2uN^2 and secrecy
    conditions are lifted so small fields and negative controls can be
    enumerated; the extractor precondition q >= N(u-1) + l always holds.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    N: int
    u: int
    q: Optional[int] = None
    rho_r: Fraction = Fraction(0)
    rho_w: Fraction = Fraction(0)
    rho: Optional[Fraction] = None
    message_length: Optional[int] = None
    enforce_constraints: bool = True

    @field_validator('rho_r', 'rho_w', 'rho', mode='before')
    @classmethod
    def _parse_rate(cls, value: Any) -> Optional[Fraction]:
        if value is None:
            return None
        return parse_rational(value)

    @model_validator(mode='before')
    @classmethod
    def _fill_defaults(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        data = dict(data)
        N, u = data.get('N'), data.get('u')
        if not isinstance(N, int) or N < 1:
            raise ConfigurationError(f"N must be a positive integer, got {N!r}")
        if not isinstance(u, int) or u < 2:
            raise ConfigurationError(f"u must be an integer >= 2, got {u!r}")

        rho_r = parse_rational(data.get('rho_r', 0))
        rho_w = parse_rational(data.get('rho_w', 0))
        data['rho_r'], data['rho_w'] = rho_r, rho_w
        if data.get('rho') is None:
            data['rho'] = min(Fraction(1), rho_r + rho_w)
        else:
            data['rho'] = parse_rational(data['rho'])
        if data.get('q') is None:
            data['q'] = select_prime(u, N).q
        if data.get('message_length') is None:
            data['message_length'] = _floor((u - 1) * (1 - data['rho']) * N)
        return data

    @model_validator(mode='after')
    def _check_constraints(self) -> 'ProtocolConfig':
        N, u, q, ell = self.N, self.u, self.q, self.message_length
        if not is_prime(q):
            raise ConfigurationError(f"q={q} is not prime")
        if not max(self.rho_r, self.rho_w) <= self.rho <= min(Fraction(1), self.rho_r + self.rho_w):
            raise ConfigurationError(
                f"rho={self.rho} must lie in [max(rho_r, rho_w), min(1, rho_r + rho_w)]"
            )
        if ell < 1:
            raise ConfigurationError(
                f"Message length l={ell} < 1: (u-1)(1-rho)N leaves no room for a message"
            )
        if q < N * (u - 1) + ell:
            raise ConfigurationError(f"q={q} is below the extractor requirement N(u-1)+l={N * (u - 1) + ell}")

        relaxed = []
        if q <= protocol_threshold(u, N):
            relaxed.append(f"q={q} <= 2uN^2={protocol_threshold(u, N)}")
        if not self.secrecy_condition_holds:
            relaxed.append(f"l={ell} > (u-1)(1-rho)N={(u - 1) * (1 - self.rho) * N}")
        if relaxed and self.enforce_constraints:
            raise ConfigurationError("Parameter constraints violated: " + "; ".join(relaxed))
        if relaxed:
            logger.warning(f"⚠️ Relaxed protocol constraints: {'; '.join(relaxed)}")
        return self

    @field_serializer('rho_r', 'rho_w', 'rho')
    def _serialize_rate(self, value: Optional[Fraction]) -> Optional[str]:
        return None if value is None else str(value)

    @classmethod
    def for_rate_target(cls, xi: Any, rho: Any, N: int) -> 'ProtocolConfig':
        """
        Member of the rate-(1 - rho) family for gap xi: u = ceil(1/xi),
        q the smallest prime above 2uN^2, restricted adversary with rate rho.
        """
        xi = Fraction(str(xi)) if isinstance(xi, float) else Fraction(xi)
        if not 0 < xi <= 1:
            raise ConfigurationError(f"xi must lie in (0, 1], got {xi}")
        u = max(2, math.ceil(1 / xi))
        rho = parse_rational(rho)
        return cls(N=N, u=u, rho_r=rho, rho_w=rho, rho=rho)

    @staticmethod
    def rate_family_min_length(xi: Any) -> int:
        """N_0 = ceil(1/xi): from this length on, delta <= uN/q <= 1/(2N) <= xi/2."""
        xi = Fraction(str(xi)) if isinstance(xi, float) else Fraction(xi)
        return math.ceil(1 / xi)

    @cached_property
    def field(self) -> PrimeModulus:
        return PrimeModulus(self.q)

    @property
    def symbol_width(self) -> int:
        return (self.q - 1).bit_length()

    @property
    def sigma_size(self) -> int:
        return self.q ** self.u

    @property
    def rate(self) -> Fraction:
        return Fraction(self.message_length, self.u * self.N)

    @property
    def reliability_bound(self) -> Fraction:
        return Fraction(self.u * self.N, self.q)

    @property
    def secrecy_condition_holds(self) -> bool:
        return self.message_length <= (self.u - 1) * (1 - self.rho) * self.N

    @property
    def read_budget(self) -> int:
        return _floor(self.rho_r * self.N)

    @property
    def write_budget(self) -> int:
        return _floor(self.rho_w * self.N)

    @property
    def union_budget(self) -> int:
        return _floor(self.rho * self.N)

    @property
    def message_space_size(self) -> int:
        return self.q ** self.message_length

    @property
    def message_bits(self) -> float:
        return self.message_length * math.log2(self.q)

    def describe(self) -> str:
        return (
            f"N={self.N} u={self.u} q={self.q} rho_r={self.rho_r} rho_w={self.rho_w} "
            f"rho={self.rho} l={self.message_length}"
        )
