import json
import math

import numpy as np
import pytest

from rootpow import (
    TRACE_HEADER,
    compare_report,
    equalize_plane,
    mse,
    psnr,
    psnr_report,
    read_trace_csv,
    trace_rows,
    write_trace_csv,
)
from rootpow.planes import denormalize_plane

from conftest import random_rgb8
from oracles import mse_loops, psnr_scalar


def test_mse_matches_loops(rng):
    for _ in range(20):
        a = rng.integers(0, 256, size=(16, 16), dtype=np.uint8)
        b = rng.integers(0, 256, size=(16, 16), dtype=np.uint8)
        assert mse(a, b) == mse_loops(a, b)


def test_mse_identical_is_zero():
    a = np.full((4, 4), 9, dtype=np.uint8)
    assert mse(a, a.copy()) == 0.0


def test_mse_shape_mismatch():
    a = np.zeros((2, 3), dtype=np.uint8)
    b = np.zeros((3, 2), dtype=np.uint8)
    with pytest.raises(ValueError, match="dimension mismatch"):
        mse(a, b)


def test_psnr_unit_error_anchor():
    a = np.zeros((16, 16), dtype=np.uint8)
    b = a.copy()
    b[0, 0] = 16  # 16^2 / 256 = 1
    assert mse(a, b) == 1.0
    assert psnr(a, b) == pytest.approx(48.1308, abs=1e-3)
    assert psnr(a, b) == pytest.approx(20.0 * math.log10(255.0), abs=1e-12)


def test_psnr_identical_is_infinite():
    a = np.arange(64, dtype=np.uint8).reshape(8, 8)
    assert psnr(a, a.copy()) == math.inf


def test_psnr_matches_scalar(rng):
    a = rng.integers(0, 256, size=(16, 16), dtype=np.uint8)
    b = rng.integers(0, 256, size=(16, 16), dtype=np.uint8)
    assert psnr(a, b) == pytest.approx(psnr_scalar(mse_loops(a, b)), abs=1e-9)


def test_report_label_and_json(rng):
    img = random_rgb8(rng)
    rep = psnr_report(img, img, "iterpow", "rgb")
    assert rep.label == "iterpow-rgb"
    d = rep.to_json_dict()
    assert d["psnr_r"] == "inf" and d["psnr_avg"] == "inf"
    assert json.dumps(d)  # must stay JSON-serializable
    other = random_rgb8(rng)
    rep = psnr_report(img, other, "ghe", "hsi")
    d = rep.to_json_dict()
    assert isinstance(d["psnr_avg"], float)
    assert rep.psnr_avg == pytest.approx((rep.psnr_r + rep.psnr_g + rep.psnr_b) / 3)


def test_report_dimension_error_names_candidate(rng):
    img = random_rgb8(rng, 4, 4)
    other = random_rgb8(rng, 5, 5)
    with pytest.raises(ValueError, match="iterpow-rgb"):
        psnr_report(img, other, "iterpow", "rgb")


def test_compare_report_deltas(rng):
    original = random_rgb8(rng)
    a = random_rgb8(rng)
    reports, deltas = compare_report(
        original, [("ghe", "rgb", a), ("iterpow", "rgb", a), ("iterpow", "hsi", original)]
    )
    assert [r.label for r in reports] == ["ghe-rgb", "iterpow-rgb", "iterpow-hsi"]
    # identical candidates compare at exactly zero
    assert deltas["ghe-rgb_vs_iterpow-rgb"] == 0.0
    # infinite average cannot form a percentage
    assert deltas["ghe-rgb_vs_iterpow-hsi"] is None
    assert deltas["iterpow-rgb_vs_iterpow-hsi"] is None
    assert len(deltas) == 3


def test_compare_report_hand_computed(rng):
    original = random_rgb8(rng)
    a = random_rgb8(rng)
    b = random_rgb8(rng)
    reports, deltas = compare_report(original, [("ghe", "rgb", a), ("iterpow", "rgb", b)])
    ra, rb = reports
    expected = 100.0 * (ra.psnr_avg - rb.psnr_avg) / rb.psnr_avg
    assert deltas["ghe-rgb_vs_iterpow-rgb"] == pytest.approx(expected, rel=1e-12)


def trace_for(plane, channel="R"):
    _, trace = equalize_plane(plane, channel=channel, keep_planes=True)
    return trace


def test_trace_rows_join_psnr(rng):
    plane = rng.random((8, 8)) * 0.4
    trace = trace_for(plane)
    ref = denormalize_plane(rng.random((8, 8)))
    rows = trace_rows([trace], {"R": ref})
    assert len(rows) == len(trace.records)
    assert [r.iteration for r in rows] == list(range(len(rows)))
    assert all(r.psnr is not None for r in rows)
    assert rows[-1].theta is None
    assert rows[0].mean == trace.initial_mean
    expected = psnr(denormalize_plane(trace.snapshots[0]), ref)
    assert rows[0].psnr == expected


def test_trace_rows_without_reference(rng):
    trace = trace_for(rng.random((4, 4)) * 0.4)
    rows = trace_rows([trace])
    assert all(r.psnr is None for r in rows)


def test_trace_csv_roundtrip(tmp_path, rng):
    plane = rng.random((8, 8)) * 0.4
    trace = trace_for(plane)
    ref = denormalize_plane(rng.random((8, 8)))
    rows = trace_rows([trace], {"R": ref})
    path = tmp_path / "trace.csv"
    write_trace_csv(path, rows)

    text = path.read_text().splitlines()
    assert text[0] == ",".join(TRACE_HEADER)
    # terminal record has no exponent; its theta cell must be empty
    assert text[len(rows)].split(",")[3] == ""

    back = read_trace_csv(path)
    assert len(back) == len(rows)
    for before, after in zip(rows, back):
        assert after.iteration == before.iteration
        assert after.channel == before.channel
        assert after.mean == pytest.approx(before.mean, rel=1e-5)
        if before.theta is None:
            assert after.theta is None
        else:
            assert after.theta == pytest.approx(before.theta, rel=1e-5)


def test_trace_csv_serializes_infinite_psnr(tmp_path, rng):
    plane = np.full((4, 4), 0.2)
    trace = trace_for(plane)
    ref = denormalize_plane(trace.snapshots[-1])
    rows = trace_rows([trace], {"R": ref})
    path = tmp_path / "trace.csv"
    write_trace_csv(path, rows)
    back = read_trace_csv(path)
    assert back[-1].psnr == math.inf
    assert "inf" in path.read_text()


def test_trace_csv_rejects_foreign_header(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("a,b,c\n1,2,3\n")
    with pytest.raises(ValueError, match="header"):
        read_trace_csv(path)


def test_csv_cells_use_six_significant_digits(tmp_path, rng):
    trace = trace_for(rng.random((8, 8)) * 0.4)
    path = tmp_path / "trace.csv"
    write_trace_csv(path, trace_rows([trace]))
    first_mean = path.read_text().splitlines()[1].split(",")[2]
    assert len(first_mean.replace(".", "").replace("-", "").lstrip("0")) <= 6
