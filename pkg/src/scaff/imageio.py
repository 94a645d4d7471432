"""Reading and writing 8-bit grayscale images (PNG and PGM).

PNG goes through Pillow and must already be 8-bit grayscale. PGM is parsed
and written directly (binary P5 and ASCII P2 are read; files are written as
P5), which gives tests a plain-text image format with no library in the way.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass

import numpy as np
from PIL import Image

from .algorithms import FillAlgorithm
from .errors import UnsupportedImageError, ValidationError
from .raster import Palette, Raster, require_color, require_raster

_EXTENSIONS = (".png", ".pgm")


@dataclass(frozen=True)
class FillConfig:
    """How the CLI decodes input images and which algorithm it runs.

    Exactly one decoding mode is active: strict (pixels must already be
    background or boundary values) or thresholded (pixels >= threshold become
    boundary, the rest background). ``strict`` is true iff ``threshold`` is
    None.
    """

    algorithm: FillAlgorithm = FillAlgorithm.SCAFF
    palette: Palette = Palette()
    threshold: int | None = None
    strict: bool = True

    def __post_init__(self) -> None:
        if self.threshold is not None:
            require_color(self.threshold, "threshold")
        if self.strict and self.threshold is not None:
            raise ValidationError("strict mode forbids a threshold")
        if not self.strict and self.threshold is None:
            raise ValidationError("non-strict mode requires a threshold")


def _read_pgm(path: str) -> Raster:
    with open(path, "rb") as fh:
        data = fh.read()
    match = re.match(rb"(P[25])\s", data)
    if not match:
        raise UnsupportedImageError(f"{path}: not a P2/P5 PGM file")
    magic = match.group(1).decode()

    # Header: magic, width, height, maxval; '#' comments may appear between tokens.
    pos = match.end(1)
    tokens: list[int] = []
    while len(tokens) < 3:
        chunk = data[pos:pos + 1]
        if not chunk:
            raise UnsupportedImageError(f"{path}: truncated PGM header")
        if chunk.isspace():
            pos += 1
        elif chunk == b"#":
            eol = data.find(b"\n", pos)
            pos = len(data) if eol == -1 else eol + 1
        else:
            m = re.match(rb"\d+", data[pos:])
            if not m:
                raise UnsupportedImageError(f"{path}: malformed PGM header")
            tokens.append(int(m.group(0)))
            pos += m.end()
    width, height, maxval = tokens
    if maxval > 255:
        raise UnsupportedImageError(f"{path}: {maxval} exceeds 8-bit depth")
    if width < 1 or height < 1 or maxval < 1:
        raise UnsupportedImageError(f"{path}: bad PGM dimensions {width}x{height}/{maxval}")

    if magic == "P5":
        pos += 1  # single whitespace byte after maxval
        raw = data[pos:pos + width * height]
        if len(raw) != width * height:
            raise UnsupportedImageError(f"{path}: truncated PGM pixel data")
        pixels = np.frombuffer(raw, dtype=np.uint8)
    else:
        values = data[pos:].split()
        if len(values) != width * height:
            raise UnsupportedImageError(
                f"{path}: expected {width * height} ASCII samples, got {len(values)}"
            )
        pixels = np.array([int(v) for v in values], dtype=np.int32)
        if pixels.min() < 0 or pixels.max() > maxval:
            raise UnsupportedImageError(f"{path}: sample outside 0..{maxval}")
        pixels = pixels.astype(np.uint8)
    return pixels.reshape(height, width).copy()


def _write_pgm(img: Raster, path: str) -> None:
    header = f"P5\n{img.shape[1]} {img.shape[0]}\n255\n".encode()
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(img.tobytes())


def read_image(path: str) -> Raster:
    """Load an 8-bit grayscale PNG or PGM as a raster."""
    ext = os.path.splitext(path)[1].lower()
    if ext == ".pgm":
        return _read_pgm(path)
    if ext == ".png":
        with Image.open(path) as im:
            if im.mode != "L":
                raise UnsupportedImageError(
                    f"{path}: mode {im.mode} is not 8-bit grayscale"
                )
            return np.asarray(im, dtype=np.uint8).copy()
    raise UnsupportedImageError(f"{path}: unsupported extension {ext!r} (use .png or .pgm)")


def decode_image(path: str, config: FillConfig) -> Raster:
    """Load an image and normalize it to a boundary image per ``config``."""
    img = read_image(path)
    palette = config.palette
    if config.strict:
        allowed = {palette.background, palette.boundary}
        strays = sorted(int(v) for v in np.unique(img) if int(v) not in allowed)
        if strays:
            raise ValidationError(
                f"{path}: stray pixel values {strays} in strict mode; expected only "
                f"{sorted(allowed)} (use a threshold to binarize)"
            )
        return img
    return np.where(img >= config.threshold, palette.boundary, palette.background).astype(np.uint8)


def encode_image(img: Raster, path: str) -> None:
    """Write a raster losslessly; format picked by extension (.png or .pgm)."""
    require_raster(img)
    ext = os.path.splitext(path)[1].lower()
    if ext == ".pgm":
        _write_pgm(img, path)
    elif ext == ".png":
        Image.fromarray(img, mode="L").save(path, format="PNG")
    else:
        raise UnsupportedImageError(f"{path}: unsupported extension {ext!r} (use .png or .pgm)")
