"""Region filling toolkit.

Turns boundary-only raster images into filled masks with two algorithms
(EFCI: exterior-fill and color inversion; SCAFF: scan-flood fill), and ships
the supporting pieces: a deterministic scenario generator with exact ground
truth, mask comparison metrics, a timing harness, image I/O and a CLI.
"""

from .algorithms import FillAlgorithm, backward_scan, efci, scaff, validate_boundary_image
from .bench import (
    ALL_CASES,
    BenchRecord,
    LinearFit,
    fit_by_algorithm,
    linear_fit,
    mean_points,
    run_bench,
    write_csv,
    write_summary_json,
)
from .casegen import (
    MIN_SIZE,
    CaseDescriptor,
    GeneratedCase,
    case_properties,
    dilate,
    extract_boundary,
    generate_case,
)
from .errors import FillInvariantError, GenerationError, UnsupportedImageError, ValidationError
from .fill import flood_fill, flood_fill_oracle
from .imageio import FillConfig, decode_image, encode_image, read_image
from .metrics import MetricReport, confusion, f1_score, mae, metric_report
from .raster import Connectivity, Palette, PixelCoord, Raster, crop, pad, relabel

__version__ = "0.1.0"

__all__ = [
    "ALL_CASES",
    "BenchRecord",
    "CaseDescriptor",
    "Connectivity",
    "FillAlgorithm",
    "FillConfig",
    "FillInvariantError",
    "GeneratedCase",
    "GenerationError",
    "LinearFit",
    "MetricReport",
    "MIN_SIZE",
    "Palette",
    "PixelCoord",
    "Raster",
    "UnsupportedImageError",
    "ValidationError",
    "backward_scan",
    "case_properties",
    "confusion",
    "crop",
    "decode_image",
    "dilate",
    "efci",
    "encode_image",
    "extract_boundary",
    "f1_score",
    "fit_by_algorithm",
    "flood_fill",
    "flood_fill_oracle",
    "generate_case",
    "linear_fit",
    "mae",
    "mean_points",
    "metric_report",
    "pad",
    "read_image",
    "relabel",
    "run_bench",
    "scaff",
    "validate_boundary_image",
    "write_csv",
    "write_summary_json",
]
