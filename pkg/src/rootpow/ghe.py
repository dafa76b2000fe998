"""Global histogram equalization baseline, per-channel RGB and HSI forms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .colorspace import hsi_to_rgb, rgb_to_hsi
from .planes import (
    HsiImage,
    Rgb8,
    as_plane_u8,
    denormalize_plane,
    normalize_plane,
)


@dataclass(frozen=True)
class Histogram256:
    """Level counts of one 8-bit plane."""

    counts: np.ndarray
    total: int

    def __post_init__(self):
        counts = np.ascontiguousarray(self.counts, dtype=np.int64)
        object.__setattr__(self, "counts", counts)
        if counts.shape != (256,):
            raise ValueError(f"histogram needs 256 bins, got shape {counts.shape}")
        if counts.min() < 0:
            raise ValueError("histogram counts must be non-negative")
        if int(counts.sum()) != self.total or self.total <= 0:
            raise ValueError("histogram counts must sum to the (positive) total")


def histogram(p8: np.ndarray) -> Histogram256:
    arr = as_plane_u8(p8)
    if arr.size == 0:
        raise ValueError("empty plane")
    counts = np.bincount(arr.ravel(), minlength=256).astype(np.int64)
    return Histogram256(counts=counts, total=int(arr.size))


def ghe_plane(p8: np.ndarray) -> np.ndarray:
    """Remap one 8-bit plane through its normalized cumulative histogram.

    map(v) = round(255 * (cdf(v) - cdf_min) / (1 - cdf_min)) with cdf_min
    the smallest nonzero cdf value, rounding half away from zero.  Anchoring
    at cdf_min makes the map the identity on a uniform histogram.  A plane
    with a single occupied level (cdf_min = 1) is returned unchanged.
    """
    arr = as_plane_u8(p8)
    hist = histogram(arr)
    cdf = np.cumsum(hist.counts) / hist.total
    cdf_min = cdf[cdf > 0.0].min()
    if cdf_min >= 1.0:
        return arr.copy()
    lut = np.floor(255.0 * (cdf - cdf_min) / (1.0 - cdf_min) + 0.5)
    # entries below the first occupied level go negative; no pixel maps
    # through them but clip so the table stays valid uint8
    lut = np.clip(lut, 0.0, 255.0).astype(np.uint8)
    return lut[arr]


def ghe_rgb(img: Rgb8) -> Rgb8:
    """Equalize each storage channel independently."""
    return Rgb8(*(ghe_plane(p) for p in img.planes()))


class GheHsiResult(NamedTuple):
    image: Rgb8
    clamped_pixels: int


def ghe_hsi(img: Rgb8) -> GheHsiResult:
    """Equalize only the intensity plane, in the 8-bit domain.

    Histogram equalization is defined on discrete levels, so the intensity
    plane is quantized to 8 bits, remapped, and taken back to the unit
    interval.  Hue and saturation pass through unchanged and the inverse
    conversion clamps out-of-gamut components, as in the iterative HSI
    pipeline.
    """
    hsi = rgb_to_hsi(img.to_unit())
    i8 = denormalize_plane(hsi.i)
    new_i = normalize_plane(ghe_plane(i8))
    edited = HsiImage(h=hsi.h, s=hsi.s, i=new_i)
    out, clamped = hsi_to_rgb(edited, count_clamped=True)
    return GheHsiResult(out.to_u8(), clamped)
