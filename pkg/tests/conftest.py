"""Shared fixtures for the AWTP-PD test suite."""

import logging
import os
import sys

import pytest

# Add the project root to Python path
sys.path.insert(0, os.path.dirname(os.path.dirname(__file__)))

from awtp_pd.adversary import AdversaryKind, AdversarySpec
from awtp_pd.protocol import ProtocolConfig
from awtp_pd.utils.config_manager import ConfigManager


@pytest.fixture(autouse=True)
def reset_package_logger():
    """CLI tests install handlers bound to captured streams; drop them after every test."""
    yield
    logger = logging.getLogger('awtp_pd')
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
    logger.propagate = True


@pytest.fixture
def small_config():
    """q=5, u=2, N=2, l=1, one component read and written: the exhaustive secrecy setting."""
    return ProtocolConfig(
        N=2, u=2, q=5, rho_r="1/2", rho_w="1/2", rho="1/2",
        enforce_constraints=False,
    )


@pytest.fixture
def leaky_config():
    """The adversary reads every component while l=1: secrecy must fail."""
    return ProtocolConfig(
        N=2, u=2, q=5, rho_r="1", rho_w="1/2", rho="1", message_length=1,
        enforce_constraints=False,
    )


@pytest.fixture
def reliability_config():
    """N=4, u=2, rho_w=1/2: q=67, l=2, failure bound 8/67."""
    return ProtocolConfig(N=4, u=2, rho_w="1/2")


@pytest.fixture
def restricted_config():
    """N=4, u=2, S_r = S_w with rho=1/2: the SMT-convertible setting."""
    return ProtocolConfig(N=4, u=2, rho_r="1/2", rho_w="1/2", rho="1/2")


@pytest.fixture
def component_zero_spec():
    return lambda kind: AdversarySpec(kind=AdversaryKind(kind), read_set=[0], write_set=[0])


@pytest.fixture
def config_manager(tmp_path):
    """ConfigManager over a path with no file: in-memory defaults only."""
    return ConfigManager(str(tmp_path / 'config.ini'))


@pytest.fixture
def single_worker(monkeypatch):
    monkeypatch.setenv('AWTP_PD_THREADS', '1')
