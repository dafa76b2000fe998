"""Four-way PSNR benchmark on degraded/original image pairs.

For every input image: squeeze its contrast with the affine degrader,
restore with each method/pipeline combination, and score the restorations
against the pristine original. Prints one PSNR table per image plus a
cross-image average summary.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from rootpow import EqualizeConfig, compare_report, degrade, load_image, save_image
from rootpow.cli import run_four_way

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fmt(x: float) -> str:
    return "inf" if math.isinf(x) else f"{x:7.3f}"


def bench_one(path: Path, gain: float, bias: float, gamma: float, outdir: Path | None):
    img = load_image(path)
    low = degrade(img, gain=gain, bias=bias, gamma=gamma)
    candidates, clamped = run_four_way(low, EqualizeConfig())
    reports, _ = compare_report(img, candidates)

    print(f"\n{path.name}  ({img.width}x{img.height})")
    print(f"  {'method':14s} {'R':>7s} {'G':>7s} {'B':>7s} {'avg':>7s}")
    for r in reports:
        extra = f"   clamped={clamped[r.label]}" if r.label in clamped else ""
        print(
            f"  {r.label:14s} {fmt(r.psnr_r)} {fmt(r.psnr_g)} {fmt(r.psnr_b)}"
            f" {fmt(r.psnr_avg)}{extra}"
        )
    if outdir is not None:
        outdir.mkdir(parents=True, exist_ok=True)
        save_image(low, outdir / f"{path.stem}_degraded.png")
        for method, pipeline, out in candidates:
            save_image(out, outdir / f"{path.stem}_{method}_{pipeline}.png")
    return {r.label: r.psnr_avg for r in reports}


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("images", nargs="*", type=Path, help="default: the bundled fixtures")
    parser.add_argument("--gain", type=float, default=0.4)
    parser.add_argument("--bias", type=float, default=0.3)
    parser.add_argument("--gamma", type=float, default=1.0)
    parser.add_argument("--outdir", type=Path, default=None, help="write degraded + restored images here")
    args = parser.parse_args(argv)

    images = args.images or sorted(FIXTURES.glob("*.ppm"))
    if not images:
        print("no input images", file=sys.stderr)
        return 1

    totals: dict[str, float] = {}
    for path in images:
        for label, avg in bench_one(path, args.gain, args.bias, args.gamma, args.outdir).items():
            totals[label] = totals.get(label, 0.0) + avg

    print(f"\naverage over {len(images)} image(s)")
    for label, total in totals.items():
        print(f"  {label:14s} {fmt(total / len(images))}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
