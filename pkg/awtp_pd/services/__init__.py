"""Orchestration services."""

from .experiment_service import ExperimentService, split_range

__all__ = ['ExperimentService', 'split_range']
