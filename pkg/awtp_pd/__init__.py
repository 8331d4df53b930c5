"""
Simulator for message transmission over adversarial wiretap channels with
public discussion (AWTP-PD): field arithmetic, hash and extractor primitives,
the three-round protocol, bound calculators and security verification.
"""

from .protocol import Message, ProtocolConfig, ProtocolTapes, run_protocol
from .adversary import AdversaryKind, AdversarySpec
from .channels import ReadWriteSets, Transcript
from .utils.config_manager import ConfigManager

__version__ = '1.0.0'

__all__ = [
    'Message',
    'ProtocolConfig',
    'ProtocolTapes',
    'run_protocol',
    'AdversaryKind',
    'AdversarySpec',
    'ReadWriteSets',
    'Transcript',
    'ConfigManager',
    '__version__',
]
