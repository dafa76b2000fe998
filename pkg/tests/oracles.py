"""Independent reference implementations used only by the tests.

Everything here is deliberately written the slow way: plain Python floats,
scalar loops, math-module functions. No numpy vectorization, no shared
helpers from the package, so agreement with the library is evidence rather
than tautology.
"""

from __future__ import annotations

import math


def scalar_theta(mu: float) -> float:
    return math.log(0.5) / math.log(mu)


def scalar_equalize(
    values,
    tol: float = 1e-4,
    max_iters: int = 100,
    stall_eps: float = 1e-9,
    mu_clamp: float = 1e-6,
):
    """Scalar fixed-point iteration on a flat list of unit intensities.

    Returns (trajectory, means, thetas, status) where trajectory[k] is the
    full pixel list after k steps and means[k] its naive-sum mean.
    """
    values = [float(v) for v in values]
    trajectory = [list(values)]
    means = [sum(values) / len(values)]
    thetas: list[float] = []
    k = 0
    stalled = False
    while True:
        mu = means[-1]
        if abs(mu - 0.5) <= tol:
            return trajectory, means, thetas, "converged"
        if stalled:
            return trajectory, means, thetas, "stalled"
        if k >= max_iters:
            return trajectory, means, thetas, "max_iters"
        clamped = min(max(mu, mu_clamp), 1.0 - mu_clamp)
        th = scalar_theta(clamped)
        thetas.append(th)
        values = [math.pow(v, th) for v in values]
        trajectory.append(list(values))
        new_mu = sum(values) / len(values)
        means.append(new_mu)
        k += 1
        stalled = abs(new_mu - mu) < stall_eps


def mse_loops(a, b) -> float:
    """Double-loop integer MSE over two uint8 planes."""
    assert a.shape == b.shape
    total = 0
    for row_a, row_b in zip(a.tolist(), b.tolist()):
        for x, y in zip(row_a, row_b):
            d = x - y
            total += d * d
    return total / (a.shape[0] * a.shape[1])


def psnr_scalar(eps: float) -> float:
    if eps == 0.0:
        return math.inf
    return 20.0 * math.log10(255.0 / math.sqrt(eps))


def histogram_loops(p8) -> list[int]:
    """Double-loop level tally over a uint8 plane."""
    counts = [0] * 256
    for row in p8.tolist():
        for v in row:
            counts[v] += 1
    return counts


def hsi_pixel(r: float, g: float, b: float) -> tuple[float, float, float]:
    """Scalar forward conversion of one RGB pixel."""
    i = (r + g + b) / 3.0
    s = 0.0 if i == 0.0 else max(0.0, 1.0 - min(r, g, b) / i)
    if max(r, g, b) == min(r, g, b):
        s = 0.0
    num = (r - g) + (r - b)
    den = 2.0 * math.sqrt(max((r - g) ** 2 + (r - b) * (g - b), 0.0))
    if den == 0.0 or s == 0.0:
        return 0.0, s, i
    angle = math.degrees(math.acos(min(1.0, max(-1.0, num / den))))
    h = (angle if b <= g else 360.0 - angle) / 360.0
    if h >= 1.0:
        h = 0.0
    return h, s, i
