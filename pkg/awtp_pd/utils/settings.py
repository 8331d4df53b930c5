"""Environment overrides for runtime settings."""

import os
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from .config_manager import ConfigManager


class WorkerSettings(BaseSettings):
    """Worker-pool settings read from AWTP_PD_* environment variables."""

    model_config = SettingsConfigDict(env_prefix='AWTP_PD_')

    threads: Optional[int] = Field(default=None, ge=1)


def resolve_worker_count(config_manager: Optional[ConfigManager] = None) -> int:
    """AWTP_PD_THREADS, then [WORKERS] THREADS, then the CPU count."""
    env_threads = WorkerSettings().threads
    if env_threads is not None:
        return env_threads
    if config_manager is not None:
        ini_threads = config_manager.get_worker_threads()
        if ini_threads is not None:
            return max(1, ini_threads)
    return os.cpu_count() or 1
