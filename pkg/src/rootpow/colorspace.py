"""RGB <-> HSI conversion (classical arccos / three-sector formulation).

Forward, per pixel with r, g, b in [0, 1]:

    I = (r + g + b) / 3
    S = 0 if I = 0, else 1 - min(r, g, b) / I
    theta = arccos( ((r-g) + (r-b)) / (2 * sqrt((r-g)^2 + (r-b)(g-b))) )
    H = theta if b <= g else 360 - theta       (then stored as H / 360)

H is defined as 0 whenever S = 0 or the arccos denominator vanishes.
The inverse walks the three 120-degree sectors; intensity-only edits can
leave the HSI triple without an exact RGB preimage, so the inverse clamps
components into [0, 1] and can report how many pixels that touched.
"""

from __future__ import annotations

import numpy as np

from .planes import HsiImage, RgbImage

# Components this far outside [0, 1] count as genuinely out of gamut;
# anything closer is rounding dust from the trig round trip.
GAMUT_TOL = 1e-9


def rgb_to_hsi(img: RgbImage) -> HsiImage:
    """Convert a unit-interval RGB image to HSI planes."""
    r, g, b = img.planes()

    i = (r + g + b) / 3.0

    mn = np.minimum(np.minimum(r, g), b)
    mx = np.maximum(np.maximum(r, g), b)
    achromatic = mx == mn

    s = np.zeros_like(i)
    lit = i > 0.0
    np.divide(mn, i, out=s, where=lit)
    s = np.where(lit, 1.0 - s, 0.0)
    # min <= mean holds exactly in real arithmetic; guard the float dust
    s = np.clip(s, 0.0, 1.0)
    s[achromatic] = 0.0

    num = 0.5 * ((r - g) + (r - b))
    # (r-g)^2 + (r-b)(g-b) = u^2 + uv + v^2 >= 0 with u = r-g, v = g-b
    den = np.sqrt(np.maximum((r - g) ** 2 + (r - b) * (g - b), 0.0))
    defined = (den > 0.0) & (s > 0.0)
    ratio = np.zeros_like(i)
    np.divide(num, den, out=ratio, where=defined)
    ratio = np.clip(ratio, -1.0, 1.0)
    angle = np.degrees(np.arccos(ratio))
    h = np.where(b <= g, angle, 360.0 - angle) / 360.0
    h = np.where(defined, h, 0.0)
    # ratio rounding to exactly 1 while b > g would land on h = 1.0
    h = np.where(h >= 1.0, 0.0, h)

    return HsiImage(h=h, s=s, i=i)


def _inverse_planes(img: HsiImage) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Sector-wise inverse without clamping; components may leave [0, 1]."""
    h, s, i = img.h, img.s, img.i
    deg = h * 360.0

    r = np.empty_like(i)
    g = np.empty_like(i)
    b = np.empty_like(i)

    # Each 120-degree sector pins one component at I(1-S), computes a second
    # from the hue angle, and balances the third so r+g+b stays 3I exactly.
    sectors = (
        (0.0, b, r, g),
        (120.0, r, g, b),
        (240.0, g, b, r),
    )
    for lo, low_c, cos_c, rest_c in sectors:
        mask = (deg >= lo) & (deg < lo + 120.0)
        if not mask.any():
            continue
        hh = np.radians(deg[mask] - lo)
        iv = i[mask]
        sv = s[mask]
        low = iv * (1.0 - sv)
        # cos(60deg - hh) stays in [0.5, 1] inside a sector, never zero
        cos = iv * (1.0 + sv * np.cos(hh) / np.cos(np.radians(60.0) - hh))
        low_c[mask] = low
        cos_c[mask] = cos
        rest_c[mask] = 3.0 * iv - (low + cos)

    gray = s == 0.0
    r[gray] = i[gray]
    g[gray] = i[gray]
    b[gray] = i[gray]
    return r, g, b


def hsi_to_rgb(img: HsiImage, count_clamped: bool = False):
    """Convert HSI planes back to RGB, clamping into [0, 1].

    With count_clamped=True, also returns the number of pixels that had any
    component clamped by more than GAMUT_TOL.
    """
    r, g, b = _inverse_planes(img)
    if count_clamped:
        off = (
            (r < -GAMUT_TOL) | (r > 1.0 + GAMUT_TOL)
            | (g < -GAMUT_TOL) | (g > 1.0 + GAMUT_TOL)
            | (b < -GAMUT_TOL) | (b > 1.0 + GAMUT_TOL)
        )
        clamped = int(np.count_nonzero(off))
    out = RgbImage(
        r=np.clip(r, 0.0, 1.0),
        g=np.clip(g, 0.0, 1.0),
        b=np.clip(b, 0.0, 1.0),
    )
    if count_clamped:
        return out, clamped
    return out
