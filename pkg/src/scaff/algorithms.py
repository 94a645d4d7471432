"""The two region filling algorithms.

Both take a *boundary image* (only background- and boundary-colored pixels)
and return a mask of the same size where enclosed regions carry the mask
color and everything else the background color. Boundary pixels are never
recolored.

``efci`` (exterior-fill and color inversion) pads the image, flood-fills the
mutual exterior from the padded origin, and inverts: whatever the exterior
fill could not reach becomes mask. It is correct whenever objects have no
holes; a hole is unreachable from the exterior too, so it gets filled over.

``scaff`` (scan-flood fill) fixes that by labeling every connected region.
After the initial exterior fill it scans the padded image in row-major order.
Each still-background pixel starts a new region; a backward scan along its
row skips the boundary run to its left and reads the label of the adjacent,
already-filled region, and the new region is flood-filled with the *opposite*
label. Regions nested at even depth end up exterior-labeled, odd depth
interior-labeled; the final relabel maps those to background and mask.

Region fills use 4-connectivity throughout: a 4-connected fill cannot leak
diagonally across an 8-connected curve of boundary pixels, so the weakest
closed curves still seal.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import FillInvariantError, ValidationError
from .fill import _next_pixel_of_color, flood_fill
from .raster import Connectivity, Palette, PixelCoord, Raster, crop, pad, relabel, require_raster

#: Origin of the padded working image; always background after padding.
_ORIGIN: PixelCoord = (0, 0)


class FillAlgorithm(Enum):
    """The implemented fill algorithms, by CLI name."""

    EFCI = "efci"
    SCAFF = "scaff"

    def fill(self, img: Raster, palette: Palette = Palette()) -> Raster:
        """Run this algorithm on ``img`` and return the filled mask."""
        fn = efci if self is FillAlgorithm.EFCI else scaff
        return fn(img, palette)


def validate_boundary_image(img: Raster, palette: Palette = Palette()) -> None:
    """Raise unless ``img`` contains only background and boundary values."""
    require_raster(img)
    allowed = {palette.background, palette.boundary}
    counts = np.bincount(img.ravel(), minlength=256)
    strays = [v for v in np.nonzero(counts)[0].tolist() if v not in allowed]
    if strays:
        raise ValidationError(
            f"boundary image contains stray pixel values {strays}; expected only "
            f"background={palette.background} and boundary={palette.boundary}"
        )


def efci(img: Raster, palette: Palette = Palette()) -> Raster:
    """Exterior-fill and color inversion. Fills holes over; see module docs."""
    validate_boundary_image(img, palette)
    work = pad(img, 1, palette.background)
    flood_fill(work, _ORIGIN, palette.exterior_label, Connectivity.FOUR)
    work = crop(work, 1)
    return relabel(
        work,
        [
            (palette.background, palette.mask),
            (palette.exterior_label, palette.background),
        ],
    )


def backward_scan(padded: Raster, pos: PixelCoord, palette: Palette = Palette()) -> int:
    """Return the label of the filled region left of ``pos`` across one boundary run.

    ``pos`` must be a background pixel reached by the row-major scan of
    ``scaff``, which guarantees everything earlier in the row is already
    non-background and that column 0 carries the exterior label. Walking left
    therefore crosses at most one run of boundary pixels before hitting an
    exterior or interior label, which is returned. Anything else means the
    scan state is corrupt and raises ``FillInvariantError``.
    """
    require_raster(padded, "padded")
    x, y = int(pos[0]), int(pos[1])
    h, w = padded.shape
    if not (0 <= x < h and 0 <= y < w):
        raise ValidationError(f"position ({x}, {y}) out of bounds for {h}x{w} image")
    if padded[x, y] != palette.background:
        raise ValidationError(
            f"backward scan must start on a background pixel, found {int(padded[x, y])}"
        )
    i = 1
    while y - i >= 0 and padded[x, y - i] == palette.boundary:
        i += 1
    if y - i < 0:
        raise FillInvariantError(
            f"backward scan from ({x}, {y}) ran off the row without leaving the boundary"
        )
    value = int(padded[x, y - i])
    if value not in (palette.exterior_label, palette.interior_label):
        raise FillInvariantError(
            f"backward scan from ({x}, {y}) landed on unexpected value {value} at "
            f"({x}, {y - i}); expected an exterior or interior label"
        )
    return value


def scaff(img: Raster, palette: Palette = Palette()) -> Raster:
    """Scan-flood fill. Handles holes, multiple objects and border contact."""
    validate_boundary_image(img, palette)
    background = palette.background
    exterior = palette.exterior_label
    interior = palette.interior_label

    work = pad(img, 1, background)
    flood_fill(work, _ORIGIN, exterior, Connectivity.FOUR)

    # Fills only ever turn background into labels, so scanning can resume
    # just past each seed and the whole sweep costs one pass over the image.
    x, y = _next_pixel_of_color(work, 0, 0, background)
    while x >= 0:
        adjacent = backward_scan(work, (x, y), palette)
        label = interior if adjacent == exterior else exterior
        flood_fill(work, (x, y), label, Connectivity.FOUR)
        x, y = _next_pixel_of_color(work, x, y + 1, background)

    work = crop(work, 1)
    return relabel(work, [(exterior, background), (interior, palette.mask)])
