"""Deterministic generator for the eight boundary/mask test scenarios.

Every scenario is one combination of three Boolean properties: more than one
object, boundary touching the image border, and holes inside objects. Cases
are numbered 1..8 with case 1 = (False, False, False) through case 8 =
(True, True, True), the booleans weighted 4/2/1.

Shapes are drawn parametrically (disks, rectangles, gently wobbly convex
blobs) directly at the target size, so the filled ground-truth mask is known
exactly by construction at every size; nothing is resampled. The boundary
image is derived from the mask by peeling ``boundary_thickness`` one-pixel
layers off its rim, which guarantees that boundary pixels are mask pixels and
that the boundary seals every 4-connected path from the outside.

Geometry keeps conservative margins (holes stay ``2*thickness + 4`` pixels
clear of any other edge, objects stay several pixels apart and away from the
border unless the case demands contact) so the generated structure is
unambiguous. Every generated case is re-checked by ``case_properties``, an
independent connected-component analysis; a mismatch raises
``GenerationError`` rather than returning a mislabeled case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .algorithms import validate_boundary_image
from .errors import GenerationError, ValidationError
from .raster import Palette, Raster, require_color, require_raster

_PAL = Palette()
_FOUR = ndimage.generate_binary_structure(2, 1)
_EIGHT = np.ones((3, 3), dtype=bool)

MIN_SIZE = 32


@dataclass(frozen=True)
class CaseDescriptor:
    """The (multiple, border, holes) triple naming one of the 8 scenarios."""

    multiple: bool
    border: bool
    holes: bool
    case_id: int

    def __post_init__(self) -> None:
        expected = 1 + 4 * int(self.multiple) + 2 * int(self.border) + int(self.holes)
        if self.case_id != expected:
            raise ValidationError(
                f"case_id {self.case_id} does not match properties "
                f"(multiple={self.multiple}, border={self.border}, holes={self.holes}); "
                f"expected {expected}"
            )

    @classmethod
    def from_case_id(cls, case_id: int) -> "CaseDescriptor":
        if not isinstance(case_id, (int, np.integer)) or not 1 <= case_id <= 8:
            raise ValidationError(f"case_id must be in 1..8, got {case_id!r}")
        bits = int(case_id) - 1
        return cls(
            multiple=bool(bits & 4),
            border=bool(bits & 2),
            holes=bool(bits & 1),
            case_id=int(case_id),
        )


@dataclass(eq=False)
class GeneratedCase:
    """One generated scenario: its descriptor, boundary image and exact mask."""

    descriptor: CaseDescriptor
    boundary_image: Raster
    ground_truth_mask: Raster
    size: int


# ---------------------------------------------------------------------------
# shape primitives (boolean masks, drawn analytically at target size)
# ---------------------------------------------------------------------------

def _disk(size: int, cx: float, cy: float, r: float) -> np.ndarray:
    xx, yy = np.ogrid[:size, :size]
    return (xx - cx) ** 2 + (yy - cy) ** 2 <= r * r


def _rect(size: int, x0: float, x1: float, y0: float, y1: float) -> np.ndarray:
    xx, yy = np.ogrid[:size, :size]
    return (xx >= x0) & (xx <= x1) & (yy >= y0) & (yy <= y1)


def _blob(size: int, cx: float, cy: float, r0: float, rng: np.random.Generator) -> np.ndarray:
    """Convex blob: a disk whose radius wobbles with two low harmonics.

    Amplitudes are capped so the polar curve stays convex, which keeps every
    row of the digitized shape a single interval (no pinch-offs). Below 8 px
    the wobble is dropped and a plain disk is drawn.
    """
    a2, a3 = rng.uniform(0.03, 0.05, size=2)
    p2, p3 = rng.uniform(0.0, 2.0 * math.pi, size=2)
    if r0 < 8.0:
        return _disk(size, cx, cy, r0)
    dx = np.arange(size, dtype=float)[:, None] - cx
    dy = np.arange(size, dtype=float)[None, :] - cy
    theta = np.arctan2(dy, dx)
    radius = r0 * (1.0 + a2 * np.cos(2.0 * theta + p2) + a3 * np.cos(3.0 * theta + p3))
    return dx * dx + dy * dy <= radius * radius


def _peel_band(fg: np.ndarray, thickness: int) -> np.ndarray:
    """Union of the outermost ``thickness`` one-pixel layers of ``fg``.

    A layer is every remaining foreground pixel with a 4-neighbor outside the
    remaining foreground; pixels beyond the image edge count as outside, so
    border-touching shapes get sealed along the border as well.
    """
    cur = fg.copy()
    band = np.zeros_like(fg)
    for _ in range(thickness):
        if not cur.any():
            break
        interior = np.zeros_like(cur)
        interior[1:-1, 1:-1] = (
            cur[:-2, 1:-1] & cur[2:, 1:-1] & cur[1:-1, :-2] & cur[1:-1, 2:]
        )
        edge = cur & ~interior
        band |= edge
        cur &= ~edge
    return band


# ---------------------------------------------------------------------------
# public morphology helpers
# ---------------------------------------------------------------------------

def dilate(img: Raster, radius: int, foreground: int = 255) -> Raster:
    """Grow the foreground by Chebyshev distance ``radius`` (square element)."""
    require_raster(img)
    require_color(foreground, "foreground")
    if not isinstance(radius, (int, np.integer)) or radius < 0:
        raise ValidationError(f"radius must be an integer >= 0, got {radius!r}")
    grown = img == foreground
    for _ in range(radius):  # square element is separable: r steps per axis
        grown[1:, :] |= grown[:-1, :].copy()
        grown[:-1, :] |= grown[1:, :].copy()
    for _ in range(radius):
        grown[:, 1:] |= grown[:, :-1].copy()
        grown[:, :-1] |= grown[:, 1:].copy()
    out = img.copy()
    out[grown] = foreground
    return out


def extract_boundary(mask: Raster, palette: Palette = Palette()) -> Raster:
    """Boundary image of a mask: mask pixels with a background 4-neighbor.

    Out-of-image neighbors count as background, so masks touching the border
    get sealed boundaries there too. The result, fed back through ``scaff``,
    reproduces the mask exactly.
    """
    require_raster(mask, "mask")
    allowed = {palette.background, palette.mask}
    counts = np.bincount(mask.ravel(), minlength=256)
    strays = [v for v in np.nonzero(counts)[0].tolist() if v not in allowed]
    if strays:
        raise ValidationError(
            f"mask contains stray pixel values {strays}; expected only "
            f"background={palette.background} and mask={palette.mask}"
        )
    band = _peel_band(mask == palette.mask, 1)
    return np.where(band, palette.boundary, palette.background).astype(np.uint8)


# ---------------------------------------------------------------------------
# structural verification
# ---------------------------------------------------------------------------

def case_properties(boundary_image: Raster, palette: Palette = Palette()) -> tuple[bool, bool, bool]:
    """Recompute (multiple, border, holes) of a boundary image independently.

    Uses connected-component labeling only: objects are the 4-components of
    everything not reachable from the outside through non-boundary pixels;
    border contact is a boundary pixel on the image edge; holes exist when
    one 8-connected boundary curve lies inside the region enclosed by
    another.
    """
    validate_boundary_image(boundary_image, palette)
    boundary = boundary_image == palette.boundary

    open_space = np.pad(~boundary, 1, constant_values=True)
    labels, _ = ndimage.label(open_space, structure=_FOUR)
    occupied = labels != labels[0, 0]
    _, n_objects = ndimage.label(occupied, structure=_FOUR)
    multiple = n_objects > 1

    border = bool(
        boundary[0, :].any()
        or boundary[-1, :].any()
        or boundary[:, 0].any()
        or boundary[:, -1].any()
    )

    holes = False
    curves, n_curves = ndimage.label(boundary, structure=_EIGHT)
    if n_curves >= 2:
        padded_curves = np.pad(curves, 1, constant_values=0)
        for curve_id in range(1, n_curves + 1):
            this_curve = padded_curves == curve_id
            reachable, _ = ndimage.label(~this_curve, structure=_FOUR)
            enclosed = reachable != reachable[0, 0]
            others = (padded_curves != 0) & ~this_curve
            if (enclosed & others).any():
                holes = True
                break

    return multiple, border, holes


# ---------------------------------------------------------------------------
# per-case geometry
# ---------------------------------------------------------------------------

def _hole_radius(preferred: float, available: float, size: int) -> float:
    radius = min(preferred, available)
    if radius < 1.0:
        raise ValidationError(
            f"size {size} too small to carve a hole with the requested boundary thickness"
        )
    return radius


def _case_mask(case_id: int, size: int, thickness: int, rng: np.random.Generator) -> np.ndarray:
    s = float(size)
    clearance = 2 * thickness + 4  # hole band + body ring + outer band + digital slop

    def jitter() -> float:
        return float(rng.uniform(-0.01, 0.01)) * s

    if case_id == 1:
        return _blob(size, 0.5 * s + jitter(), 0.5 * s + jitter(), 0.30 * s, rng)

    if case_id == 2:
        cx, cy = 0.5 * s + jitter(), 0.5 * s + jitter()
        outer = _blob(size, cx, cy, 0.32 * s, rng)
        hx, hy = cx + jitter(), cy + jitter()
        offset = math.hypot(hx - cx, hy - cy)
        inner_reach = (0.32 * s if 0.32 * s < 8.0 else 0.90 * 0.32 * s) - 1.0
        r_hole = _hole_radius(0.13 * s, inner_reach - clearance - offset, size)
        return outer & ~_disk(size, hx, hy, r_hole)

    if case_id == 3:
        return _disk(size, 0.5 * s + jitter(), 0.05 * s, 0.32 * s)

    if case_id == 4:
        x0, x1 = 0.22 * s + jitter(), 0.78 * s + jitter()
        body = _rect(size, x0, x1, 0.0, 0.50 * s)
        hx, hy = 0.50 * s + jitter(), 0.25 * s + jitter()
        margin = min(hx - x0, x1 - hx, hy, 0.50 * s - hy)
        r_hole = _hole_radius(0.08 * s, margin - clearance, size)
        return body & ~_disk(size, hx, hy, r_hole)

    if case_id == 5:
        a = _blob(size, 0.30 * s + jitter(), 0.30 * s + jitter(), 0.16 * s, rng)
        b = _blob(size, 0.68 * s + jitter(), 0.66 * s + jitter(), 0.16 * s, rng)
        return a | b

    if case_id == 6:
        cx, cy = 0.40 * s + jitter(), 0.40 * s + jitter()
        big = _disk(size, cx, cy, 0.28 * s)
        hx, hy = cx + jitter(), cy + jitter()
        offset = math.hypot(hx - cx, hy - cy)
        r_hole = _hole_radius(0.07 * s, (0.28 * s - 1.0) - clearance - offset, size)
        small = _blob(size, 0.78 * s + jitter(), 0.78 * s + jitter(), 0.09 * s, rng)
        return (big & ~_disk(size, hx, hy, r_hole)) | small

    if case_id == 7:
        bar = _rect(size, 0.0, 0.30 * s, 0.15 * s + jitter(), 0.55 * s + jitter())
        free = _blob(size, 0.70 * s + jitter(), 0.72 * s + jitter(), 0.14 * s, rng)
        return bar | free

    if case_id == 8:
        x0, x1 = 0.15 * s + jitter(), 0.70 * s + jitter()
        body = _rect(size, x0, x1, 0.0, 0.50 * s)
        hx, hy = 0.42 * s + jitter(), 0.25 * s + jitter()
        margin = min(hx - x0, x1 - hx, hy, 0.50 * s - hy)
        r_hole = _hole_radius(0.07 * s, margin - clearance, size)
        free = _blob(size, 0.80 * s + jitter(), 0.75 * s + jitter(), 0.10 * s, rng)
        return (body & ~_disk(size, hx, hy, r_hole)) | free

    raise ValidationError(f"case_id must be in 1..8, got {case_id!r}")


def generate_case(
    case_id: int,
    size: int = 200,
    boundary_thickness: int = 1,
    seed: int = 0,
) -> GeneratedCase:
    """Generate one scenario with its boundary image and exact ground truth.

    Identical arguments always produce a bit-identical case. ``size`` must be
    at least ``MIN_SIZE`` and scales with ``boundary_thickness`` so holes stay
    carvable.
    """
    descriptor = CaseDescriptor.from_case_id(case_id)
    if not isinstance(size, (int, np.integer)):
        raise ValidationError(f"size must be an integer, got {size!r}")
    if not isinstance(boundary_thickness, (int, np.integer)) or boundary_thickness < 1:
        raise ValidationError(f"boundary_thickness must be an integer >= 1, got {boundary_thickness!r}")
    if size < MIN_SIZE or size < MIN_SIZE * boundary_thickness:
        raise ValidationError(
            f"size {size} too small: need at least {max(MIN_SIZE, MIN_SIZE * boundary_thickness)} "
            f"for boundary_thickness {boundary_thickness}"
        )
    if not isinstance(seed, (int, np.integer)) or seed < 0:
        raise ValidationError(f"seed must be a non-negative integer, got {seed!r}")

    rng = np.random.default_rng([int(case_id), int(size), int(boundary_thickness), int(seed)])
    mask = _case_mask(int(case_id), int(size), int(boundary_thickness), rng)
    band = _peel_band(mask, int(boundary_thickness))

    boundary_image = np.where(band, _PAL.boundary, _PAL.background).astype(np.uint8)
    ground_truth = np.where(mask, _PAL.mask, _PAL.background).astype(np.uint8)

    found = case_properties(boundary_image)
    wanted = (descriptor.multiple, descriptor.border, descriptor.holes)
    if found != wanted:
        raise GenerationError(
            f"case {case_id} (size={size}, thickness={boundary_thickness}, seed={seed}) "
            f"failed structural verification: expected {wanted}, found {found}"
        )
    return GeneratedCase(descriptor, boundary_image, ground_truth, int(size))
