"""Iterative root/power contrast equalization.

The balancing step measures a channel's mean intensity mu on [0, 1] and
raises every pixel to the power

    theta = ln(0.5) / ln(mu)

which is the unique exponent sending a constant image of value mu exactly
to 0.5: a root (theta < 1) that brightens when the image is dark, a power
(theta > 1) that darkens when it is bright.  Repeating measure-then-map
drives the mean toward 0.5 from one side without ever crossing it, because
x**theta is monotone and concave (or convex) on [0, 1].

Exact mean 0.5 is unreachable in finite precision, and planes made of the
fixed points 0 and 1 never move at all, so the loop stops on the first of:

    converged   |mu - 0.5| <= tol        (checked before each step)
    stalled     the mean moved by less than stall_eps in one step
    max_iters   the transition cap was reached

Two color pipelines are provided: per-channel RGB, and HSI where only the
intensity plane is balanced while hue and saturation pass through
untouched (equalizing those would destroy the image's color identity).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .colorspace import hsi_to_rgb, rgb_to_hsi
from .planes import HsiImage, RgbImage, as_plane_unit, plane_mean


class Status(enum.Enum):
    """How a plane's iteration ended."""

    CONVERGED = "converged"
    STALLED = "stalled"
    MAX_ITERS = "max_iters"


@dataclass(frozen=True)
class EqualizeConfig:
    """Stopping rules for the fixed-point loop.

    tol:       stop as converged when |mu - 0.5| <= tol
    max_iters: hard cap on the number of power steps
    stall_eps: stop as stalled when one step moves the mean less than this
    mu_clamp:  mu is clamped into [mu_clamp, 1 - mu_clamp] before the log
               ratio, since theta is undefined at mu = 0 and mu = 1
    """

    tol: float = 1e-4
    max_iters: int = 100
    stall_eps: float = 1e-9
    mu_clamp: float = 1e-6

    def __post_init__(self):
        if not 0.0 < self.tol < 0.5:
            raise ValueError(f"tol must be in (0, 0.5), got {self.tol}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if not 0.0 < self.stall_eps < self.tol:
            raise ValueError(f"stall_eps must be in (0, tol), got {self.stall_eps}")
        if not 0.0 < self.mu_clamp < 0.5:
            raise ValueError(f"mu_clamp must be in (0, 0.5), got {self.mu_clamp}")


@dataclass
class IterationRecord:
    """One trace row: the mean seen at step k, and the exponent applied to
    leave it (None on the terminal row, where no step was taken)."""

    k: int
    mean: float
    theta: float | None = None


@dataclass
class IterationTrace:
    """Full history of one plane's balancing run.

    records[0].mean is the input mean; each applied exponent lives on the
    record it departed from, so a run with n transitions has n + 1 records
    and n thetas.  snapshots, when captured, holds the plane state per
    record (used to join per-iteration PSNR later).
    """

    channel: str
    records: list[IterationRecord] = field(default_factory=list)
    status: Status = Status.CONVERGED
    snapshots: list[np.ndarray] | None = None

    @property
    def iterations(self) -> int:
        """Number of power steps actually applied."""
        return len(self.records) - 1

    @property
    def initial_mean(self) -> float:
        return self.records[0].mean

    @property
    def final_mean(self) -> float:
        return self.records[-1].mean

    def means(self) -> list[float]:
        return [rec.mean for rec in self.records]


def theta(mu: float) -> float:
    """Power factor ln(0.5)/ln(mu) for a mean mu in (0, 1).

    Below 1 for mu < 0.5, above 1 for mu > 0.5, exactly 1 at mu = 0.5.
    Callers clamp mu away from the endpoints first.
    """
    if not 0.0 < mu < 1.0:
        raise ValueError(f"degenerate mean {mu}")
    return math.log(0.5) / math.log(mu)


def power_step(p: np.ndarray, th: float) -> np.ndarray:
    """Raise every pixel of a unit plane to the power th > 0.

    0 and 1 are exact fixed points, and the map preserves pixel ordering.
    """
    if not th > 0.0:
        raise ValueError(f"power factor must be positive, got {th}")
    return np.power(as_plane_unit(p), th)


def equalize_plane(
    p: np.ndarray,
    cfg: EqualizeConfig | None = None,
    *,
    channel: str = "plane",
    keep_planes: bool = False,
) -> tuple[np.ndarray, IterationTrace]:
    """Balance one unit plane's mean to 0.5 by repeated power steps.

    Returns the final plane and the full iteration trace.  The convergence
    test runs before the first step, so an already balanced plane is
    returned untouched with an empty (zero-step) trace.

    keep_planes stores a copy of the plane per trace record; memory grows
    with iterations times plane size, so reserve it for trace reporting.
    """
    if cfg is None:
        cfg = EqualizeConfig()
    p = as_plane_unit(p)

    mu = plane_mean(p)
    records = [IterationRecord(0, mu)]
    snapshots: list[np.ndarray] | None = [p.copy()] if keep_planes else None

    k = 0
    stalled = False
    while True:
        if abs(mu - 0.5) <= cfg.tol:
            status = Status.CONVERGED
            break
        if stalled:
            status = Status.STALLED
            break
        if k >= cfg.max_iters:
            status = Status.MAX_ITERS
            break

        mu_safe = min(max(mu, cfg.mu_clamp), 1.0 - cfg.mu_clamp)
        th = theta(mu_safe)
        records[-1].theta = th

        p = power_step(p, th)
        new_mu = plane_mean(p)
        k += 1
        records.append(IterationRecord(k, new_mu))
        if snapshots is not None:
            snapshots.append(p)

        stalled = abs(new_mu - mu) < cfg.stall_eps
        mu = new_mu

    return p, IterationTrace(channel, records, status, snapshots)


class RgbEqualizeResult(NamedTuple):
    image: RgbImage
    traces: tuple[IterationTrace, IterationTrace, IterationTrace]


def equalize_rgb(
    img: RgbImage,
    cfg: EqualizeConfig | None = None,
    *,
    keep_planes: bool = False,
) -> RgbEqualizeResult:
    """Balance the R, G and B planes independently."""
    out = []
    traces = []
    for label, plane in zip("RGB", img.planes()):
        new_plane, trace = equalize_plane(
            plane, cfg, channel=label, keep_planes=keep_planes
        )
        out.append(new_plane)
        traces.append(trace)
    return RgbEqualizeResult(RgbImage(*out), tuple(traces))


class HsiEqualizeResult(NamedTuple):
    image: RgbImage
    trace: IterationTrace
    clamped_pixels: int
    # pre/post intensity-edit HSI states, kept so the hue/saturation
    # pass-through is directly assertable
    hsi_input: HsiImage
    hsi_equalized: HsiImage


def equalize_hsi(
    img: RgbImage,
    cfg: EqualizeConfig | None = None,
    *,
    keep_planes: bool = False,
) -> HsiEqualizeResult:
    """Balance only the intensity plane in HSI space.

    Hue and saturation pass through bitwise-unchanged; the edited intensity
    can push triples out of the RGB gamut, so the inverse conversion clamps
    components and the count of affected pixels is reported.
    """
    hsi = rgb_to_hsi(img)
    new_i, trace = equalize_plane(hsi.i, cfg, channel="I", keep_planes=keep_planes)
    edited = HsiImage(h=hsi.h, s=hsi.s, i=new_i)
    out, clamped = hsi_to_rgb(edited, count_clamped=True)
    return HsiEqualizeResult(out, trace, clamped, hsi, edited)
