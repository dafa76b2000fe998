from pathlib import Path

import numpy as np
import pytest

from rootpow import Rgb8, load_image

REPO = Path(__file__).resolve().parent.parent
FIXTURES_DIR = REPO / "fixtures"


def random_rgb8(rng: np.random.Generator, height: int = 16, width: int = 16) -> Rgb8:
    levels = rng.integers(0, 256, size=(height, width, 3), dtype=np.uint8)
    return Rgb8(levels[..., 0], levels[..., 1], levels[..., 2])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


@pytest.fixture(scope="session")
def corpus_paths() -> list[Path]:
    paths = sorted(FIXTURES_DIR.glob("*.ppm"))
    assert paths, "fixture corpus missing; run scripts/make_fixtures.py"
    return paths


@pytest.fixture(scope="session")
def corpus(corpus_paths) -> list[tuple[str, Rgb8]]:
    return [(p.stem, load_image(p)) for p in corpus_paths]
