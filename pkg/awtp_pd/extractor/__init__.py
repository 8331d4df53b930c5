"""Seedless Reed-Solomon extractor for symbol-fixing sources."""

from .reed_solomon import (
    ExtractorParams,
    interpolate,
    interpolate_ints,
    evaluate,
    evaluate_ints,
    extract,
    extract_ints,
    rs_extend,
)
from .sources import (
    SymbolFixingSource,
    output_distribution,
    distance_from_uniform,
    ExtractorCheckResult,
    check_extractor_uniformity,
    extractor_uniformity_suite,
)

__all__ = [
    'ExtractorParams',
    'interpolate',
    'interpolate_ints',
    'evaluate',
    'evaluate_ints',
    'extract',
    'extract_ints',
    'rs_extend',
    'SymbolFixingSource',
    'output_distribution',
    'distance_from_uniform',
    'ExtractorCheckResult',
    'check_extractor_uniformity',
    'extractor_uniformity_suite',
]
