"""Experiment configuration and result rows."""

import logging
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from pydantic import BaseModel, Field, field_validator

from ..adversary import AdversaryKind, AdversarySpec
from ..protocol import Message, ProtocolConfig
from ..utils.config_manager import ConfigManager, parse_index_list, parse_rational
from ..utils.errors import ConfigurationError

logger = logging.getLogger(__name__)


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class ExperimentConfig(BaseModel):
    """Parameters of one CLI experiment, merged from config.ini, a config file and flags."""

    N: int = Field(ge=1)
    u: int = Field(ge=2)
    q: Optional[int] = None
    rho_r: str = "0"
    rho_w: str = "0"
    rho: Optional[str] = None
    message_length: Optional[int] = None
    adversary: AdversaryKind = AdversaryKind.SUBSTITUTION
    read_set: Optional[List[int]] = None
    write_set: Optional[List[int]] = None
    trials: int = Field(default=10000, ge=1)
    seed: int = 42
    adversary_seed: int = 0
    budget: int = Field(default=10_000_000, ge=1)
    m1: Optional[List[int]] = None
    m2: Optional[List[int]] = None
    representation: str = "awtp"
    output_path: str = ""
    format: OutputFormat = OutputFormat.CSV
    timing: bool = False
    transcript_out: Optional[str] = None

    @field_validator('rho_r', 'rho_w', 'rho', mode='before')
    @classmethod
    def _check_rate(cls, value: Any) -> Optional[str]:
        if value is None:
            return None
        parse_rational(value)
        return str(value)

    @field_validator('read_set', 'write_set', 'm1', 'm2', mode='before')
    @classmethod
    def _parse_list(cls, value: Any) -> Optional[List[int]]:
        if isinstance(value, str):
            return parse_index_list(value)
        return value

    @field_validator('representation')
    @classmethod
    def _check_representation(cls, value: str) -> str:
        if value not in ("awtp", "smt"):
            raise ValueError(f"representation must be 'awtp' or 'smt', got '{value}'")
        return value

    @classmethod
    def defaults_from_ini(cls, config_manager: ConfigManager) -> Dict[str, Any]:
        cm = config_manager
        return {
            'N': cm.get_codeword_length(),
            'u': cm.get_symbols_per_component(),
            'q': cm.get_prime(),
            'rho_r': str(cm.get_read_rate()),
            'rho_w': str(cm.get_write_rate()),
            'rho': None if cm.get_union_rate() is None else str(cm.get_union_rate()),
            'adversary': cm.get_adversary_strategy(),
            'read_set': cm.get_read_set(),
            'write_set': cm.get_write_set(),
            'trials': cm.get_trials(),
            'seed': cm.get_seed(),
            'budget': cm.get_enumeration_budget(),
            'output_path': cm.get_output_path(),
            'format': cm.get_output_format(),
        }

    @classmethod
    def from_sources(
        cls,
        config_manager: ConfigManager,
        config_file: Optional[str] = None,
        overrides: Optional[Dict[str, Any]] = None,
    ) -> 'ExperimentConfig':
        """ini defaults, then the structured config file (JSON or YAML), then explicit flags."""
        values = cls.defaults_from_ini(config_manager)
        if config_file:
            path = Path(config_file)
            if not path.exists():
                raise ConfigurationError(f"Config file not found: {config_file}")
            loaded = yaml.safe_load(path.read_text()) or {}
            if not isinstance(loaded, dict):
                raise ConfigurationError(f"Config file {config_file} must hold a mapping")
            values.update(loaded)
        values.update({k: v for k, v in (overrides or {}).items() if v is not None})
        return cls.model_validate(values)

    @property
    def relaxed(self) -> bool:
        """An explicit q or message length lifts the protocol's parameter constraints."""
        return self.q is not None or self.message_length is not None

    def protocol_config(self) -> ProtocolConfig:
        return ProtocolConfig(
            N=self.N,
            u=self.u,
            q=self.q,
            rho_r=self.rho_r,
            rho_w=self.rho_w,
            rho=self.rho,
            message_length=self.message_length,
            enforce_constraints=not self.relaxed,
        )

    def adversary_spec(self) -> AdversarySpec:
        return AdversarySpec(kind=self.adversary, read_set=self.read_set, write_set=self.write_set)

    def messages(self, config: ProtocolConfig) -> tuple:
        """m1 and m2 for secrecy runs; default to 0...0 and 1 0...0."""
        ell = config.message_length
        m1 = self.m1 if self.m1 is not None else [0] * ell
        m2 = self.m2 if self.m2 is not None else [1] + [0] * (ell - 1)
        for name, m in (('m1', m1), ('m2', m2)):
            if len(m) != ell:
                raise ConfigurationError(f"{name} must have l={ell} elements, got {len(m)}")
        return Message(tuple(m1), config.q), Message(tuple(m2), config.q)


def _format_set(values: Optional[List[int]]) -> str:
    return "random" if values is None else ";".join(str(v) for v in sorted(values))


class ResultRow(BaseModel):
    """One experiment: configuration echo, measurements, analytic bounds and verdict."""

    command: str
    N: int
    u: int
    q: int
    rho_r: str
    rho_w: str
    rho: str
    message_length: int
    adversary: str
    read_set: str
    write_set: str
    representation: str
    seed: int
    trials: Optional[int] = None
    enumeration_size: Optional[int] = None
    measured_sd: Optional[str] = None
    measured_failure_rate: Optional[float] = None
    failures: Optional[int] = None
    bound_sd: Optional[float] = None
    bound_failure: Optional[float] = None
    margin: Optional[float] = None
    rate: float
    rate_upper_bound: float
    rc_m: Optional[int] = None
    secrecy_condition_holds: bool
    status: str
    wall_time: Optional[float] = None

    @classmethod
    def base(cls, command: str, experiment: ExperimentConfig, config: ProtocolConfig, **fields) -> 'ResultRow':
        return cls(
            command=command,
            N=config.N,
            u=config.u,
            q=config.q,
            rho_r=str(config.rho_r),
            rho_w=str(config.rho_w),
            rho=str(config.rho),
            message_length=config.message_length,
            adversary=experiment.adversary.value,
            read_set=_format_set(experiment.read_set),
            write_set=_format_set(experiment.write_set),
            representation=experiment.representation,
            seed=experiment.seed,
            rate=float(config.rate),
            rate_upper_bound=float(1 - config.rho),
            secrecy_condition_holds=config.secrecy_condition_holds,
            **fields,
        )

    def record(self, timing: bool = False) -> Dict[str, Any]:
        return self.model_dump(mode='json', exclude=None if timing else {'wall_time'})
