"""Core raster representation, the semantic color palette, and shared primitives.

An image ("raster") is a 2-D ``numpy.uint8`` array of shape ``(height, width)``
in row-major order, indexed ``img[x, y]`` with ``x`` the row and ``y`` the
column. Every operation in the package either returns a fresh array or
mutates a working copy the caller exclusively owns; nothing holds global
state, so rasters can be processed on any thread.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import ValidationError

#: A raster is a 2-D uint8 array; these aliases only document intent.
Raster = np.ndarray
#: (row, col) pair addressing one pixel of a raster.
PixelCoord = tuple[int, int]


def require_raster(img: np.ndarray, name: str = "img") -> np.ndarray:
    """Check that ``img`` is a non-empty 2-D uint8 array and return it."""
    if not isinstance(img, np.ndarray):
        raise ValidationError(f"{name} must be a numpy array, got {type(img).__name__}")
    if img.ndim != 2:
        raise ValidationError(f"{name} must be 2-D, got shape {img.shape}")
    if img.dtype != np.uint8:
        raise ValidationError(f"{name} must have dtype uint8, got {img.dtype}")
    if img.shape[0] < 1 or img.shape[1] < 1:
        raise ValidationError(f"{name} must be at least 1x1, got shape {img.shape}")
    return img


def require_color(value: int, name: str = "color") -> int:
    """Check that ``value`` is an integer in the 8-bit range and return it."""
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ValidationError(f"{name} must be an integer, got {value!r}")
    if not 0 <= int(value) <= 255:
        raise ValidationError(f"{name} must be in 0..255, got {value}")
    return int(value)


class Connectivity(Enum):
    """Pixel neighborhood rule: 4 axis neighbors, or those plus diagonals."""

    FOUR = 4
    EIGHT = 8

    @property
    def offsets(self) -> tuple[tuple[int, int], ...]:
        """(row, col) offsets of the neighborhood, axis neighbors first."""
        four = ((0, -1), (0, 1), (-1, 0), (1, 0))
        if self is Connectivity.FOUR:
            return four
        return four + ((-1, -1), (1, 1), (-1, 1), (1, -1))


@dataclass(frozen=True)
class Palette:
    """The five semantic pixel values used throughout the toolkit.

    ``background``, ``boundary``, ``exterior_label`` and ``interior_label``
    must be pairwise distinct; ``mask`` may equal ``boundary`` (the default:
    output masks then swallow the boundary, which is what ground-truth mask
    formats expect) but must differ from the other three.
    """

    background: int = 0
    boundary: int = 255
    exterior_label: int = 80
    interior_label: int = 128
    mask: int = 255

    def __post_init__(self) -> None:
        for name in ("background", "boundary", "exterior_label", "interior_label", "mask"):
            require_color(getattr(self, name), name)
        distinct = (self.background, self.boundary, self.exterior_label, self.interior_label)
        if len(set(distinct)) != 4:
            raise ValidationError(
                "background, boundary, exterior_label and interior_label must be pairwise "
                f"distinct, got {distinct}"
            )
        if self.mask in (self.background, self.exterior_label, self.interior_label):
            raise ValidationError(
                f"mask color {self.mask} collides with background or a label color"
            )


def pad(img: Raster, margin: int = 1, color: int = 0) -> Raster:
    """Return ``img`` surrounded by a uniform frame of ``margin`` pixels."""
    require_raster(img)
    require_color(color)
    if not isinstance(margin, (int, np.integer)) or margin < 1:
        raise ValidationError(f"margin must be an integer >= 1, got {margin!r}")
    h, w = img.shape
    out = np.full((h + 2 * margin, w + 2 * margin), color, dtype=np.uint8)
    out[margin:margin + h, margin:margin + w] = img
    return out


def crop(img: Raster, margin: int) -> Raster:
    """Return the central sub-raster after removing ``margin`` on every side."""
    require_raster(img)
    if not isinstance(margin, (int, np.integer)) or margin < 0:
        raise ValidationError(f"margin must be an integer >= 0, got {margin!r}")
    h, w = img.shape
    if h <= 2 * margin or w <= 2 * margin:
        raise ValidationError(
            f"image {h}x{w} too small to crop a margin of {margin} from every side"
        )
    return img[margin:h - margin, margin:w - margin].copy()


def relabel(img: Raster, mapping: Iterable[Sequence[int]]) -> Raster:
    """Rewrite pixel values according to ``mapping``, all pairs at once.

    ``mapping`` is a sequence of ``(from, to)`` pairs. Every pair is applied
    simultaneously against the *input* image, so a pixel is rewritten at most
    once and swaps like ``[(a, b), (b, a)]`` behave as expected. ``from``
    values must be pairwise distinct.
    """
    require_raster(img)
    pairs = [(require_color(f, "from"), require_color(t, "to")) for f, t in mapping]
    froms = [f for f, _ in pairs]
    if len(set(froms)) != len(froms):
        raise ValidationError(f"duplicate 'from' values in relabel mapping: {froms}")
    out = img.copy()
    for src, dst in pairs:
        out[img == src] = dst
    return out
