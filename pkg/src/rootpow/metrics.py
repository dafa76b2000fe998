"""Image fidelity metrics and report shapes for the benchmark harness.

PSNR is computed in the 8-bit storage domain against the peak level 255:

    psnr = 20 * log10(255 / sqrt(mse))

with mse accumulated in exact integer arithmetic before the division.
Identical planes yield math.inf, serialized as the string "inf" so report
files stay valid JSON.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .equalize import IterationTrace
from .planes import Rgb8, as_plane_u8, denormalize_plane


def mse(a: np.ndarray, b: np.ndarray) -> float:
    """Mean squared error between two 8-bit planes of identical shape."""
    pa = as_plane_u8(a)
    pb = as_plane_u8(b)
    if pa.shape != pb.shape:
        raise ValueError(f"dimension mismatch: {pa.shape} vs {pb.shape}")
    diff = pa.astype(np.int64) - pb.astype(np.int64)
    return int(np.sum(diff * diff)) / diff.size


def psnr(a: np.ndarray, b: np.ndarray) -> float:
    """Peak signal-to-noise ratio in dB; math.inf for identical planes."""
    err = mse(a, b)
    if err == 0.0:
        return math.inf
    return 20.0 * math.log10(255.0 / math.sqrt(err))


def _fmt(value: float) -> float | str:
    return "inf" if math.isinf(value) else value


@dataclass(frozen=True)
class PsnrReport:
    """Per-channel and average PSNR for one method/pipeline pair."""

    method: str
    pipeline: str
    psnr_r: float
    psnr_g: float
    psnr_b: float
    psnr_avg: float

    @property
    def label(self) -> str:
        return f"{self.method}-{self.pipeline}"

    def to_json_dict(self) -> dict:
        return {
            "method": self.method,
            "pipeline": self.pipeline,
            "psnr_r": _fmt(self.psnr_r),
            "psnr_g": _fmt(self.psnr_g),
            "psnr_b": _fmt(self.psnr_b),
            "psnr_avg": _fmt(self.psnr_avg),
        }


def psnr_report(original: Rgb8, candidate: Rgb8, method: str, pipeline: str) -> PsnrReport:
    try:
        values = [psnr(o, c) for o, c in zip(original.planes(), candidate.planes())]
    except ValueError as exc:
        raise ValueError(f"candidate {method}-{pipeline}: {exc}") from None
    avg = (values[0] + values[1] + values[2]) / 3.0
    return PsnrReport(method, pipeline, values[0], values[1], values[2], avg)


def compare_report(
    original: Rgb8,
    candidates: Sequence[tuple[str, str, Rgb8]],
) -> tuple[list[PsnrReport], dict[str, float | None]]:
    """PSNR of each (method, pipeline, image) candidate against the original.

    Also returns the pairwise percentage differences of the average rows,
    keyed "labelA_vs_labelB" with value 100 * (avgA - avgB) / avgB.  A pair
    with equal averages reports 0; a pair that cannot form a finite ratio
    reports None.
    """
    reports = [
        psnr_report(original, image, method, pipeline)
        for method, pipeline, image in candidates
    ]
    deltas: dict[str, float | None] = {}
    for i, first in enumerate(reports):
        for second in reports[i + 1 :]:
            key = f"{first.label}_vs_{second.label}"
            if first.psnr_avg == second.psnr_avg:
                deltas[key] = 0.0
            elif math.isinf(first.psnr_avg) or math.isinf(second.psnr_avg) or second.psnr_avg == 0.0:
                deltas[key] = None
            else:
                deltas[key] = 100.0 * (first.psnr_avg - second.psnr_avg) / second.psnr_avg
    return reports, deltas


TRACE_HEADER = ("iteration", "channel", "mean", "theta", "psnr")


class TraceRow(NamedTuple):
    """One CSV row of the per-iteration report."""

    iteration: int
    channel: str
    mean: float
    theta: float | None
    psnr: float | None


def trace_rows(
    traces: Sequence[IterationTrace],
    reference: dict[str, np.ndarray] | None = None,
) -> list[TraceRow]:
    """Flatten traces into rows grouped by channel, iteration ascending.

    When a reference plane is supplied for a trace's channel and the trace
    captured snapshots, each row carries the PSNR of the quantized plane
    state against that reference; otherwise the psnr column is empty.
    """
    rows: list[TraceRow] = []
    for trace in traces:
        ref = reference.get(trace.channel) if reference else None
        for rec in trace.records:
            value: float | None = None
            if ref is not None and trace.snapshots is not None:
                value = psnr(denormalize_plane(trace.snapshots[rec.k]), ref)
            rows.append(TraceRow(rec.k, trace.channel, rec.mean, rec.theta, value))
    return rows


def _cell(value: float | None) -> str:
    if value is None:
        return ""
    if math.isinf(value):
        return "inf"
    return f"{value:.6g}"


def write_trace_csv(path, rows: Sequence[TraceRow]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(TRACE_HEADER)
        for row in rows:
            writer.writerow(
                [row.iteration, row.channel, _cell(row.mean), _cell(row.theta), _cell(row.psnr)]
            )


def read_trace_csv(path) -> list[TraceRow]:
    def parse(cell: str) -> float | None:
        if cell == "":
            return None
        if cell == "inf":
            return math.inf
        return float(cell)

    rows: list[TraceRow] = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = tuple(next(reader))
        if header != TRACE_HEADER:
            raise ValueError(f"unexpected trace header: {header}")
        for rec in reader:
            mean = parse(rec[2])
            if mean is None:
                raise ValueError(f"trace row missing mean: {rec}")
            rows.append(TraceRow(int(rec[0]), rec[1], mean, parse(rec[3]), parse(rec[4])))
    return rows
