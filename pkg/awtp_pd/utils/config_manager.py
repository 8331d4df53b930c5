"""Configuration management on top of the config.ini pattern."""

import os
import configparser
from fractions import Fraction
from typing import Dict, List, Optional, Union

from .errors import ConfigurationError


def parse_rational(value: Union[str, int, float, Fraction]) -> Fraction:
    """
    Parse a rate given as "p/q", a decimal string, or a number into a Fraction.

    Decimals are read exactly from their string form, so "0.5" is 1/2 and not a
    binary floating-point approximation.
    """
    if isinstance(value, Fraction):
        result = value
    elif isinstance(value, int):
        result = Fraction(value)
    elif isinstance(value, float):
        result = Fraction(str(value))
    else:
        text = str(value).strip()
        if not text:
            raise ConfigurationError("Empty rational value")
        try:
            result = Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise ConfigurationError(f"Cannot parse rational '{value}': {e}") from e
    if result < 0 or result > 1:
        raise ConfigurationError(f"Rate {result} outside [0, 1]")
    return result


def parse_index_list(value: str) -> Optional[List[int]]:
    """Parse "0,2,3" into [0, 2, 3]; "random" (or empty) gives None."""
    text = value.strip().lower()
    if text in ("", "random"):
        return None
    try:
        return [int(item) for item in text.split(',') if item.strip()]
    except ValueError as e:
        raise ConfigurationError(f"Cannot parse index list '{value}': {e}") from e


class ConfigManager:
    """Configuration manager for simulator defaults kept in config.ini."""

    def __init__(self, config_path: Optional[str] = None):
        self.config = configparser.ConfigParser()

        # Default to config.ini next to the package
        if config_path is None:
            config_path = os.path.join(os.path.dirname(__file__), '..', 'config.ini')

        self.config_path = config_path
        self.load_config()

    def load_config(self):
        """Load configuration from config.ini, falling back to built-in defaults."""
        self.create_default_config()
        if os.path.exists(self.config_path):
            self.config.read(self.config_path)

    def create_default_config(self):
        """Populate every section with its default values (in memory only)."""
        self.config['PROTOCOL'] = {
            'N': '4',
            'U': '2',
            'RHO_R': '0',
            'RHO_W': '1/2',
            'RHO': '',
            'Q': '',
        }

        self.config['ADVERSARY'] = {
            'STRATEGY': 'substitution',
            'READ_SET': 'random',
            'WRITE_SET': 'random',
        }

        self.config['EXPERIMENT'] = {
            'TRIALS': '10000',
            'SEED': '42',
            'ENUMERATION_BUDGET': '10000000',
        }

        self.config['OUTPUT'] = {
            'FORMAT': 'csv',
            'PATH': '',
            'LOG_FILE': '',
            'LOG_LEVEL': 'INFO',
        }

        self.config['WORKERS'] = {
            'THREADS': '',
        }

    def save_config(self):
        """Save current configuration to file."""
        config_dir = os.path.dirname(os.path.abspath(self.config_path))
        os.makedirs(config_dir, exist_ok=True)

        with open(self.config_path, 'w') as configfile:
            self.config.write(configfile)

    # Protocol parameters
    def get_codeword_length(self) -> int:
        return int(self.config['PROTOCOL']['N'])

    def get_symbols_per_component(self) -> int:
        return int(self.config['PROTOCOL']['U'])

    def get_read_rate(self) -> Fraction:
        return parse_rational(self.config['PROTOCOL']['RHO_R'])

    def get_write_rate(self) -> Fraction:
        return parse_rational(self.config['PROTOCOL']['RHO_W'])

    def get_union_rate(self) -> Optional[Fraction]:
        value = self.config['PROTOCOL'].get('RHO', '').strip()
        return parse_rational(value) if value else None

    def get_prime(self) -> Optional[int]:
        value = self.config['PROTOCOL']['Q'].strip()
        return int(value) if value else None

    # Adversary
    def get_adversary_strategy(self) -> str:
        return self.config['ADVERSARY']['STRATEGY'].strip().lower()

    def get_read_set(self) -> Optional[List[int]]:
        return parse_index_list(self.config['ADVERSARY']['READ_SET'])

    def get_write_set(self) -> Optional[List[int]]:
        return parse_index_list(self.config['ADVERSARY']['WRITE_SET'])

    # Experiment
    def get_trials(self) -> int:
        return int(self.config['EXPERIMENT']['TRIALS'])

    def get_seed(self) -> int:
        return int(self.config['EXPERIMENT']['SEED'])

    def get_enumeration_budget(self) -> int:
        return int(self.config['EXPERIMENT']['ENUMERATION_BUDGET'])

    # Output
    def get_output_format(self) -> str:
        return self.config['OUTPUT']['FORMAT'].strip().lower()

    def get_output_path(self) -> str:
        return self.config['OUTPUT']['PATH']

    def get_log_file(self) -> str:
        return self.config['OUTPUT']['LOG_FILE']

    def get_log_level(self) -> str:
        return self.config['OUTPUT']['LOG_LEVEL'].strip().upper()

    # Workers
    def get_worker_threads(self) -> Optional[int]:
        value = self.config['WORKERS']['THREADS'].strip()
        return int(value) if value else None

    # Utility methods
    def get_section(self, section_name: str) -> Dict[str, str]:
        """Get all values from a configuration section."""
        if section_name in self.config:
            return dict(self.config[section_name])
        return {}

    def set_value(self, section: str, key: str, value: str):
        """Set a configuration value (call save_config() to persist it)."""
        if section not in self.config:
            self.config[section] = {}
        self.config[section][key] = value

    def get_value(self, section: str, key: str, default: str = '') -> str:
        """Get a configuration value with optional default."""
        return self.config.get(section, key, fallback=default)
