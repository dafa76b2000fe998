"""Planar image containers and 8-bit <-> unit-interval conversion.

A channel ("plane") is a 2-D numpy array, row-major, top-left origin.
Storage planes are uint8 levels 0..255; working planes are float64
intensities in [0, 1].  Color images carry three named planes that must
share one shape.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


def as_plane_u8(data) -> np.ndarray:
    """Validate and return a 2-D uint8 plane."""
    arr = np.ascontiguousarray(data)
    if arr.ndim != 2:
        raise ValueError(f"plane must be 2-D, got shape {arr.shape}")
    if arr.dtype != np.uint8:
        raise ValueError(f"8-bit plane must be uint8, got {arr.dtype}")
    return arr


def as_plane_unit(data) -> np.ndarray:
    """Validate and return a 2-D float64 plane with values in [0, 1]."""
    arr = np.ascontiguousarray(data, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"plane must be 2-D, got shape {arr.shape}")
    if arr.size and (not np.isfinite(arr).all() or arr.min() < 0.0 or arr.max() > 1.0):
        raise ValueError("plane intensities must lie in [0, 1]")
    return arr


def normalize_plane(p8: np.ndarray) -> np.ndarray:
    """Map uint8 levels to unit-interval intensities, exactly level/255."""
    return as_plane_u8(p8).astype(np.float64) / 255.0


def denormalize_plane(p: np.ndarray) -> np.ndarray:
    """Map unit-interval intensities back to uint8 levels.

    Rounds half away from zero (so 127.5 becomes 128); np.round would
    round ties to even.  Values are clamped into [0, 255] first.
    """
    arr = as_plane_unit(p)
    levels = np.floor(arr * 255.0 + 0.5)
    return np.clip(levels, 0.0, 255.0).astype(np.uint8)


def plane_mean(p: np.ndarray) -> float:
    """Mean intensity of a unit plane: sum of all pixels over pixel count.

    Uses exactly rounded compensated summation (math.fsum) in row-major
    order, so the result is deterministic and permutation-invariant.
    """
    arr = as_plane_unit(p)
    if arr.size == 0:
        raise ValueError("empty plane")
    return math.fsum(arr.ravel().tolist()) / arr.size


def _check_three_planes(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> None:
    if not (a.shape == b.shape == c.shape):
        raise ValueError(f"planes disagree on shape: {a.shape}, {b.shape}, {c.shape}")
    if a.size == 0:
        raise ValueError("image planes must be non-empty")


@dataclass(frozen=True, eq=False)
class Rgb8:
    """Color image in storage form: three uint8 planes of one shape."""

    r: np.ndarray
    g: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        for name in ("r", "g", "b"):
            object.__setattr__(self, name, as_plane_u8(getattr(self, name)))
        _check_three_planes(self.r, self.g, self.b)

    @property
    def height(self) -> int:
        return self.r.shape[0]

    @property
    def width(self) -> int:
        return self.r.shape[1]

    def planes(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.r, self.g, self.b

    def to_unit(self) -> "RgbImage":
        return RgbImage(*(normalize_plane(p) for p in self.planes()))


@dataclass(frozen=True, eq=False)
class RgbImage:
    """Color image in working form: three float64 unit-interval planes."""

    r: np.ndarray
    g: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        for name in ("r", "g", "b"):
            object.__setattr__(self, name, as_plane_unit(getattr(self, name)))
        _check_three_planes(self.r, self.g, self.b)

    @property
    def height(self) -> int:
        return self.r.shape[0]

    @property
    def width(self) -> int:
        return self.r.shape[1]

    def planes(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.r, self.g, self.b

    def to_u8(self) -> Rgb8:
        return Rgb8(*(denormalize_plane(p) for p in self.planes()))


@dataclass(frozen=True, eq=False)
class HsiImage:
    """Hue / saturation / intensity planes, all stored on the unit interval.

    Hue is the angle divided by 360 degrees, so it lives in [0, 1).  Pixels
    with zero saturation have no defined hue; the canonical convention here
    is h = 0 wherever s = 0.
    """

    h: np.ndarray
    s: np.ndarray
    i: np.ndarray

    def __post_init__(self):
        for name in ("h", "s", "i"):
            object.__setattr__(self, name, as_plane_unit(getattr(self, name)))
        _check_three_planes(self.h, self.s, self.i)
        if np.any(self.h >= 1.0):
            raise ValueError("hue must lie in [0, 1)")
        if np.any(self.h[self.s == 0.0] != 0.0):
            raise ValueError("hue must be 0 wherever saturation is 0")

    @property
    def height(self) -> int:
        return self.h.shape[0]

    @property
    def width(self) -> int:
        return self.h.shape[1]
