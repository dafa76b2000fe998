"""Contrast balancing by iterated n-th root / n-th power intensity maps.

The core move: a plane of unit-range intensities with mean mu is mapped
through x -> x**theta with theta = ln(0.5) / ln(mu), which drags the mean
toward 0.5 while preserving pixel rank order. Repeating until the mean
lands inside a tolerance band gives a parameter-free contrast equalizer.
The package applies it per RGB channel or to the intensity plane of the
HSI representation, and ships a global-histogram-equalization baseline
plus PSNR tooling so the two can be compared on degraded/original pairs.
"""

from .colorspace import GAMUT_TOL, hsi_to_rgb, rgb_to_hsi
from .equalize import (
    EqualizeConfig,
    HsiEqualizeResult,
    IterationRecord,
    IterationTrace,
    RgbEqualizeResult,
    Status,
    equalize_hsi,
    equalize_plane,
    equalize_rgb,
    power_step,
    theta,
)
from .fileio import degrade, load_image, save_image
from .ghe import GheHsiResult, Histogram256, ghe_hsi, ghe_plane, ghe_rgb, histogram
from .metrics import (
    TRACE_HEADER,
    PsnrReport,
    TraceRow,
    compare_report,
    mse,
    psnr,
    psnr_report,
    read_trace_csv,
    trace_rows,
    write_trace_csv,
)
from .planes import (
    HsiImage,
    Rgb8,
    RgbImage,
    as_plane_u8,
    as_plane_unit,
    denormalize_plane,
    normalize_plane,
    plane_mean,
)

__all__ = [
    "GAMUT_TOL",
    "TRACE_HEADER",
    "EqualizeConfig",
    "GheHsiResult",
    "Histogram256",
    "HsiEqualizeResult",
    "HsiImage",
    "IterationRecord",
    "IterationTrace",
    "PsnrReport",
    "Rgb8",
    "RgbEqualizeResult",
    "RgbImage",
    "Status",
    "TraceRow",
    "as_plane_u8",
    "as_plane_unit",
    "compare_report",
    "degrade",
    "denormalize_plane",
    "equalize_hsi",
    "equalize_plane",
    "equalize_rgb",
    "ghe_hsi",
    "ghe_plane",
    "ghe_rgb",
    "histogram",
    "hsi_to_rgb",
    "load_image",
    "mse",
    "normalize_plane",
    "plane_mean",
    "power_step",
    "psnr",
    "psnr_report",
    "read_trace_csv",
    "rgb_to_hsi",
    "save_image",
    "theta",
    "trace_rows",
    "write_trace_csv",
]

__version__ = "0.1.0"
