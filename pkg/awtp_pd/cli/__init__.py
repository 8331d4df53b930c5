"""Command-line experiment runner."""

from .main import build_parser, main
from .models import ExperimentConfig, OutputFormat, ResultRow
from .writers import CSV_HEADER, render_table, write_table, read_csv_table
from .commands import (
    EXIT_OK,
    EXIT_BOUND_VIOLATED,
    EXIT_CONFIG_ERROR,
    cmd_run,
    cmd_secrecy,
    cmd_bounds,
    cmd_export_smt,
    cmd_hash_check,
    cmd_ext_check,
)

__all__ = [
    'build_parser',
    'main',
    'ExperimentConfig',
    'OutputFormat',
    'ResultRow',
    'CSV_HEADER',
    'render_table',
    'write_table',
    'read_csv_table',
    'EXIT_OK',
    'EXIT_BOUND_VIOLATED',
    'EXIT_CONFIG_ERROR',
    'cmd_run',
    'cmd_secrecy',
    'cmd_bounds',
    'cmd_export_smt',
    'cmd_hash_check',
    'cmd_ext_check',
]
