"""Generate the bundled test cards.

Every card is deterministic (fixed seeds, fixed math), so rerunning this
script reproduces the PPM files in fixtures/ byte for byte. The three
designs deliberately have non-flat histograms: on a flat histogram the
global-histogram-equalization baseline can invert an affine contrast
squeeze almost exactly, which would make benchmark comparisons vacuous.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from rootpow import Rgb8, save_image

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def _to_u8(field: np.ndarray) -> np.ndarray:
    return np.clip(np.floor(field * 255.0 + 0.5), 0, 255).astype(np.uint8)


def gradient_card(size: int = 96) -> Rgb8:
    """Modulated sinusoidal gradient with small per-channel offsets.

    Sine of a ramp piles mass near its extremes (arcsine law), so the
    histogram is smooth but far from uniform.
    """
    y, x = np.mgrid[0:size, 0:size] / (size - 1)
    base = 0.5 + 0.30 * np.sin(2.0 * np.pi * (0.8 * x + 0.15)) * np.cos(np.pi * y)
    r = np.clip(base + 0.10 * x, 0.0, 1.0)
    g = np.clip(base, 0.0, 1.0)
    b = np.clip(base - 0.08 * y, 0.0, 1.0)
    return Rgb8(_to_u8(r), _to_u8(g), _to_u8(b))


def skin_patch(size: int = 64, seed: int = 5) -> Rgb8:
    """Flat skin tone under cosine shading with mild sensor noise."""
    rng = np.random.default_rng(seed)
    y, x = np.mgrid[0:size, 0:size] / (size - 1)
    shade = 0.85 + 0.15 * np.cos(np.pi * (x - 0.5)) * np.cos(np.pi * (y - 0.5))
    planes = []
    for base in (0.80, 0.58, 0.46):
        field = base * shade + rng.normal(0.0, 0.02, size=(size, size))
        planes.append(_to_u8(np.clip(field, 0.0, 1.0)))
    return Rgb8(*planes)


def noise_card(size: int = 64, seed: int = 11) -> Rgb8:
    """Gaussian-histogram noise with slightly different stats per channel."""
    rng = np.random.default_rng(seed)
    planes = [
        _to_u8(np.clip(rng.normal(mean, sigma, size=(size, size)), 0.0, 1.0))
        for mean, sigma in ((0.55, 0.16), (0.50, 0.14), (0.45, 0.12))
    ]
    return Rgb8(*planes)


CARDS = {
    "gradient_card": gradient_card,
    "skin_patch": skin_patch,
    "noise_card": noise_card,
}


def main() -> None:
    FIXTURES.mkdir(exist_ok=True)
    for name, make in CARDS.items():
        dest = FIXTURES / f"{name}.ppm"
        save_image(make(), dest)
        print(f"wrote {dest}")


if __name__ == "__main__":
    main()
