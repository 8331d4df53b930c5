"""Configuration, settings, logging, randomness and error helpers."""

from .config_manager import ConfigManager, parse_rational, parse_index_list
from .settings import WorkerSettings, resolve_worker_count
from .logging_config import configure_logging
from .tapes import RandomTape, FixedTape, GeneratorTape, trial_rng, sets_rng
from . import errors

__all__ = [
    'ConfigManager',
    'parse_rational',
    'parse_index_list',
    'WorkerSettings',
    'resolve_worker_count',
    'configure_logging',
    'RandomTape',
    'FixedTape',
    'GeneratorTape',
    'trial_rng',
    'sets_rng',
    'errors',
]
