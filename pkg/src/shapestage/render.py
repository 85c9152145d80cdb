"""Deterministic software rasterizer with PPM output.

Fill coverage is defined as: a pixel is filled iff its center (i + 0.5,
j + 0.5) satisfies :func:`shapestage.geometry.point_in_polygon`. The fill
below evaluates exactly that predicate, vectorized with numpy, so the
per-pixel oracle holds bit-for-bit. No anti-aliasing: determinism and
testability outrank appearance here; a browser canvas does the pretty
rendering.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import BinaryIO, Mapping, Sequence, Union

import numpy as np

from shapestage.geometry import EDGE_EPSILON, Point, aabb_of
from shapestage.scene import Stage

RGB = tuple[int, int, int]


@dataclass(frozen=True)
class Style:
    """Resolved drawing style: fill and stroke colors, stroke thickness."""

    fill: RGB
    stroke: RGB = (0, 0, 0)
    stroke_width: int = 0

    def __post_init__(self) -> None:
        for channel in (*self.fill, *self.stroke):
            if not 0 <= channel <= 255:
                raise ValueError(f"color channel out of range: {channel}")
        if self.stroke_width < 0:
            raise ValueError("stroke width must be >= 0")


class Framebuffer:
    """Row-major grid of 8-bit RGB pixels."""

    def __init__(self, width: int, height: int, fill: RGB = (255, 255, 255)):
        if width <= 0 or height <= 0:
            raise ValueError("framebuffer dimensions must be positive")
        self.width = width
        self.height = height
        self.data = np.empty((height, width, 3), dtype=np.uint8)
        self.data[:, :] = fill

    def get_pixel(self, x: int, y: int) -> RGB:
        r, g, b = self.data[y, x]
        return (int(r), int(g), int(b))

    def set_pixel(self, x: int, y: int, color: RGB) -> None:
        self.data[y, x] = color

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Framebuffer):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and bool(np.array_equal(self.data, other.data))
        )

    def tobytes(self) -> bytes:
        return self.data.tobytes()


def _fill_polygon(fb: Framebuffer, vertices: Sequence[Point], color: RGB) -> None:
    """Paint every pixel whose center is inside the polygon (even-odd rule
    plus the edge-epsilon band), vectorized over the polygon's AABB."""
    box = aabb_of(vertices)
    i0 = max(0, int(math.floor(box.min_x)) - 1)
    i1 = min(fb.width - 1, int(math.ceil(box.max_x)) + 1)
    j0 = max(0, int(math.floor(box.min_y)) - 1)
    j1 = min(fb.height - 1, int(math.ceil(box.max_y)) + 1)
    if i0 > i1 or j0 > j1:
        return

    px = np.arange(i0, i1 + 1, dtype=np.float64)[None, :] + 0.5
    py = np.arange(j0, j1 + 1, dtype=np.float64)[:, None] + 0.5

    inside = np.zeros((j1 - j0 + 1, i1 - i0 + 1), dtype=bool)
    near = np.zeros_like(inside)
    eps_sq = EDGE_EPSILON * EDGE_EPSILON
    n = len(vertices)
    with np.errstate(divide="ignore", invalid="ignore"):
        for i in range(n):
            a = vertices[i]
            b = vertices[(i + 1) % n]
            # Same half-open crossing rule as point_in_polygon.
            crosses = (a.y > py) != (b.y > py)
            if crosses.any():
                t = (py - a.y) / (b.y - a.y)
                x_cross = a.x + t * (b.x - a.x)
                inside ^= crosses & (px < x_cross)
            # Same squared-distance-to-segment form as the epsilon check.
            dx = b.x - a.x
            dy = b.y - a.y
            length_sq = dx * dx + dy * dy
            if length_sq == 0.0:
                cx, cy = a.x, a.y
            else:
                t = np.clip(((px - a.x) * dx + (py - a.y) * dy) / length_sq, 0.0, 1.0)
                cx = a.x + t * dx
                cy = a.y + t * dy
            near |= (px - cx) ** 2 + (py - cy) ** 2 <= eps_sq

    mask = inside | near
    region = fb.data[j0 : j1 + 1, i0 : i1 + 1]
    region[mask] = color


def _brush(fb: Framebuffer, x: int, y: int, color: RGB, width: int) -> None:
    lo = -(width // 2)
    hi = lo + width
    x0, x1 = max(0, x + lo), min(fb.width, x + hi)
    y0, y1 = max(0, y + lo), min(fb.height, y + hi)
    if x0 < x1 and y0 < y1:
        fb.data[y0:y1, x0:x1] = color


def _stroke_line(fb: Framebuffer, a: Point, b: Point, color: RGB, width: int) -> None:
    """Bresenham line between the pixels containing the endpoints, stamped
    with a square brush. Deterministic; approximate by design."""
    x0 = int(math.floor(a.x))
    y0 = int(math.floor(a.y))
    x1 = int(math.floor(b.x))
    y1 = int(math.floor(b.y))
    dx = abs(x1 - x0)
    dy = -abs(y1 - y0)
    sx = 1 if x0 < x1 else -1
    sy = 1 if y0 < y1 else -1
    err = dx + dy
    while True:
        _brush(fb, x0, y0, color, width)
        if x0 == x1 and y0 == y1:
            break
        e2 = 2 * err
        if e2 >= dy:
            err += dy
            x0 += sx
        if e2 <= dx:
            err += dx
            y0 += sy


def render(
    stage: Stage,
    style_table: Mapping[str, Style],
    background: Union[RGB, Framebuffer] = (255, 255, 255),
) -> Framebuffer:
    """Rasterize a stage bottom-up (painter's algorithm): fill, then stroke.

    ``background`` is a flat color or a raster image whose dimensions must
    equal the stage bounds (blitted 1:1).
    """
    width, height = stage.bounds.width, stage.bounds.height
    if isinstance(background, Framebuffer):
        if background.width != width or background.height != height:
            raise ValueError("background image dimensions must match stage bounds")
        fb = Framebuffer(width, height)
        fb.data[:, :] = background.data
    else:
        fb = Framebuffer(width, height, fill=background)

    for shape in stage.iter_shapes():
        try:
            style = style_table[shape.style]
        except KeyError:
            raise KeyError(f"unknown style: {shape.style}") from None
        vertices = shape.effective_vertices()
        _fill_polygon(fb, vertices, style.fill)
        if style.stroke_width > 0:
            n = len(vertices)
            for i in range(n):
                _stroke_line(fb, vertices[i], vertices[(i + 1) % n], style.stroke, style.stroke_width)
    return fb


def write_ppm(fb: Framebuffer, sink: BinaryIO) -> None:
    """Binary P6: ``P6\\n<w> <h>\\n255\\n`` then raw RGB rows."""
    sink.write(b"P6\n%d %d\n255\n" % (fb.width, fb.height))
    sink.write(fb.tobytes())


_PPM_HEADER = re.compile(rb"^P6\s+(\d+)\s+(\d+)\s+(\d+)\s", re.ASCII)


def read_ppm(source: BinaryIO) -> Framebuffer:
    """Exact inverse of write_ppm; rejects malformed or truncated streams."""
    raw = source.read()
    match = _PPM_HEADER.match(raw)
    if match is None:
        raise ValueError("malformed image: bad P6 header")
    width, height, maxval = (int(g) for g in match.groups())
    if width <= 0 or height <= 0 or maxval != 255:
        raise ValueError("malformed image: unsupported dimensions or depth")
    payload = raw[match.end() :]
    expected = width * height * 3
    if len(payload) != expected:
        raise ValueError(f"malformed image: expected {expected} payload bytes, got {len(payload)}")
    fb = Framebuffer(width, height)
    fb.data = np.frombuffer(payload, dtype=np.uint8).reshape(height, width, 3).copy()
    return fb
