"""Pixel-level comparison of predicted masks against ground truth."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .raster import Raster, require_color, require_raster


@dataclass(frozen=True)
class MetricReport:
    """Confusion counts plus F1 and MAE for one prediction/ground-truth pair."""

    tp: int
    fp: int
    fn: int
    tn: int
    f1: float
    mae: float


def _check_pair(pred: Raster, gt: Raster) -> None:
    require_raster(pred, "pred")
    require_raster(gt, "gt")
    if pred.shape != gt.shape:
        raise ValidationError(f"dimension mismatch: pred {pred.shape} vs gt {gt.shape}")


def confusion(pred: Raster, gt: Raster, positive: int = 255) -> tuple[int, int, int, int]:
    """Per-pixel (tp, fp, fn, tn) where positive means "pixel == positive"."""
    _check_pair(pred, gt)
    require_color(positive, "positive")
    p = pred == positive
    g = gt == positive
    tp = int(np.count_nonzero(p & g))
    fp = int(np.count_nonzero(p & ~g))
    fn = int(np.count_nonzero(~p & g))
    tn = int(np.count_nonzero(~p & ~g))
    return tp, fp, fn, tn


def f1_score(pred: Raster, gt: Raster, positive: int = 255) -> float:
    """2TP / (2TP + FP + FN); defined as 1.0 when both masks are empty."""
    tp, fp, fn, _ = confusion(pred, gt, positive)
    denom = 2 * tp + fp + fn
    if denom == 0:
        return 1.0
    return 2.0 * tp / denom


def mae(pred: Raster, gt: Raster) -> float:
    """Mean absolute pixel difference, normalized to [0, 1] by 255."""
    _check_pair(pred, gt)
    return float(np.mean(np.abs(pred.astype(np.int16) - gt.astype(np.int16)))) / 255.0


def metric_report(pred: Raster, gt: Raster, positive: int = 255) -> MetricReport:
    """Bundle confusion counts, F1 and MAE for one image pair."""
    tp, fp, fn, tn = confusion(pred, gt, positive)
    return MetricReport(tp=tp, fp=fp, fn=fn, tn=tn, f1=f1_score(pred, gt, positive), mae=mae(pred, gt))
