"""Timing harness: measure both fill algorithms across image sizes and fit
time against pixel count to check that the cost stays linear.

Image generation happens outside the timed region; each record times exactly
one fill call on a pre-built boundary image. One warm-up fill per
(algorithm, size) is discarded before timing to shake out first-touch
allocation noise. The timing loop is strictly single-threaded.
"""

from __future__ import annotations

import csv
import gc
import json
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .algorithms import FillAlgorithm
from .casegen import generate_case
from .errors import ValidationError
from .raster import Palette

ALL_CASES = tuple(range(1, 9))

#: Exact CSV column order for benchmark records.
CSV_FIELDS = ("algorithm", "case_id", "size", "pixel_count", "repeat", "seconds")


@dataclass(frozen=True)
class BenchRecord:
    """One timing measurement: one algorithm, one image, one repetition."""

    algorithm: FillAlgorithm
    case_id: int
    size: int
    pixel_count: int
    repeat_index: int
    seconds: float

    def __post_init__(self) -> None:
        if self.pixel_count != self.size * self.size:
            raise ValidationError(
                f"pixel_count {self.pixel_count} is not size^2 for size {self.size}"
            )
        if not self.seconds > 0:
            raise ValidationError(f"seconds must be > 0, got {self.seconds}")


@dataclass(frozen=True)
class LinearFit:
    """Ordinary least squares fit of seconds against pixel count."""

    slope: float
    intercept: float
    adj_r2: float


def linear_fit(points: Iterable[tuple[float, float]]) -> LinearFit:
    """OLS fit of (x, y) points; adjusted R^2 uses 1-(1-R^2)(n-1)/(n-2)."""
    pts = list(points)
    if len(pts) < 3:
        raise ValidationError(f"need at least 3 points to fit, got {len(pts)}")
    xs = np.asarray([float(x) for x, _ in pts])
    ys = np.asarray([float(y) for _, y in pts])
    if np.unique(xs).size == 1:
        raise ValidationError("degenerate fit: all x values are equal")
    slope, intercept = np.polyfit(xs, ys, 1)
    residuals = ys - (slope * xs + intercept)
    ss_res = float(np.sum(residuals**2))
    ss_tot = float(np.sum((ys - ys.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    n = len(pts)
    adj = 1.0 - (1.0 - r2) * (n - 1) / (n - 2)
    return LinearFit(slope=float(slope), intercept=float(intercept), adj_r2=float(adj))


def run_bench(
    sizes: Sequence[int],
    cases: Sequence[int] = ALL_CASES,
    repeats: int = 3,
    algorithms: Sequence[FillAlgorithm] = (FillAlgorithm.EFCI, FillAlgorithm.SCAFF),
    boundary_thickness: int = 1,
    seed: int = 0,
    palette: Palette = Palette(),
) -> list[BenchRecord]:
    """Time every (algorithm, size, case, repeat) combination once."""
    if not sizes:
        raise ValidationError("sizes must not be empty")
    if not isinstance(repeats, (int, np.integer)) or repeats < 1:
        raise ValidationError(f"repeats must be an integer >= 1, got {repeats!r}")
    if not cases:
        raise ValidationError("cases must not be empty")
    if not algorithms:
        raise ValidationError("algorithms must not be empty")

    records: list[BenchRecord] = []
    gc_was_enabled = gc.isenabled()
    gc.disable()  # keep collector pauses out of the timed region
    try:
        for size in sizes:
            images = {}
            for case_id in cases:
                try:
                    images[case_id] = generate_case(
                        case_id, size, boundary_thickness, seed
                    ).boundary_image
                except Exception as exc:
                    raise RuntimeError(
                        f"benchmark image generation failed (case {case_id}, size {size})"
                    ) from exc
            for algorithm in algorithms:
                try:
                    algorithm.fill(images[cases[0]], palette)  # warm-up, discarded
                except Exception as exc:
                    raise RuntimeError(
                        f"benchmark warm-up failed ({algorithm.value}, size {size})"
                    ) from exc
                for repeat_index in range(repeats):
                    for case_id in cases:
                        img = images[case_id]
                        try:
                            start = time.perf_counter()
                            algorithm.fill(img, palette)
                            elapsed = time.perf_counter() - start
                        except Exception as exc:
                            raise RuntimeError(
                                f"benchmark fill failed ({algorithm.value}, case {case_id}, "
                                f"size {size}, repeat {repeat_index})"
                            ) from exc
                        records.append(
                            BenchRecord(
                                algorithm=algorithm,
                                case_id=int(case_id),
                                size=int(size),
                                pixel_count=int(size) * int(size),
                                repeat_index=repeat_index,
                                seconds=elapsed,
                            )
                        )
    finally:
        if gc_was_enabled:
            gc.enable()
    return records


def mean_points(records: Iterable[BenchRecord], algorithm: FillAlgorithm) -> list[tuple[int, float]]:
    """Collapse records to (pixel_count, mean seconds) points for one algorithm."""
    by_pixels: dict[int, list[float]] = {}
    for rec in records:
        if rec.algorithm is algorithm:
            by_pixels.setdefault(rec.pixel_count, []).append(rec.seconds)
    return [(px, float(np.mean(ts))) for px, ts in sorted(by_pixels.items())]


def fit_by_algorithm(records: Iterable[BenchRecord]) -> dict[FillAlgorithm, LinearFit]:
    """One linear fit per algorithm over its per-size mean timings."""
    records = list(records)
    fits = {}
    for algorithm in FillAlgorithm:
        points = mean_points(records, algorithm)
        if points:
            fits[algorithm] = linear_fit(points)
    return fits


def write_csv(records: Iterable[BenchRecord], path: str) -> None:
    """Write raw records as CSV with the documented column order."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_FIELDS)
        for rec in records:
            writer.writerow(
                [
                    rec.algorithm.value,
                    rec.case_id,
                    rec.size,
                    rec.pixel_count,
                    rec.repeat_index,
                    f"{rec.seconds:.9f}",
                ]
            )


def write_summary_json(fits: dict[FillAlgorithm, LinearFit], path: str) -> None:
    """Write the per-algorithm fit summary as JSON."""
    payload = {
        algorithm.value: {
            "slope": fit.slope,
            "intercept": fit.intercept,
            "adj_r2": fit.adj_r2,
        }
        for algorithm, fit in fits.items()
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
