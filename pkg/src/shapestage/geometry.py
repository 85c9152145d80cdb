"""Pure point-set geometry: bounding containers and point-in-polygon.

Coordinate convention (shared by every module): origin at the top-left,
x grows right, y grows *down*, as on a canvas. All values are
double-precision pixels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

# Points closer than this to a polygon edge count as inside. Gives a
# stable selection feel when clicking right on an outline.
EDGE_EPSILON = 1e-9


@dataclass(frozen=True)
class Point:
    """A 2D coordinate in stage pixel space."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")

    def translated(self, dx: float, dy: float) -> "Point":
        return Point(self.x + dx, self.y + dy)


@dataclass(frozen=True)
class Aabb:
    """Axis-aligned bounding box (min/max per coordinate)."""

    min_x: float
    min_y: float
    max_x: float
    max_y: float

    def __post_init__(self) -> None:
        if self.min_x > self.max_x or self.min_y > self.max_y:
            raise ValueError("inverted bounding box")

    @property
    def width(self) -> float:
        return self.max_x - self.min_x

    @property
    def height(self) -> float:
        return self.max_y - self.min_y

    def contains(self, pt: Point) -> bool:
        return self.min_x <= pt.x <= self.max_x and self.min_y <= pt.y <= self.max_y


@dataclass(frozen=True)
class DiagonalBox:
    """Bounding container with edges of slope -1 and +1.

    Bounds the quantities p = x + y and q = x - y over a point set, so its
    sides are the diagonal lines p = const and q = const.
    """

    p_min: float
    p_max: float
    q_min: float
    q_max: float

    def __post_init__(self) -> None:
        if self.p_min > self.p_max or self.q_min > self.q_max:
            raise ValueError("inverted diagonal box")

    def contains(self, pt: Point) -> bool:
        p = pt.x + pt.y
        q = pt.x - pt.y
        return self.p_min <= p <= self.p_max and self.q_min <= q <= self.q_max


def aabb_of(points: Sequence[Point]) -> Aabb:
    """Tight axis-aligned bounding box of a nonempty point set."""
    if not points:
        raise ValueError("empty point set")
    return Aabb(
        min(pt.x for pt in points),
        min(pt.y for pt in points),
        max(pt.x for pt in points),
        max(pt.y for pt in points),
    )


def diagonal_box_of(points: Sequence[Point]) -> DiagonalBox:
    """Tight diagonal bounding container of a nonempty point set."""
    if not points:
        raise ValueError("empty point set")
    ps = [pt.x + pt.y for pt in points]
    qs = [pt.x - pt.y for pt in points]
    return DiagonalBox(min(ps), max(ps), min(qs), max(qs))


def _segment_distance_sq(px: float, py: float, ax: float, ay: float, bx: float, by: float) -> float:
    """Squared distance from (px, py) to segment a-b."""
    dx = bx - ax
    dy = by - ay
    length_sq = dx * dx + dy * dy
    if length_sq == 0.0:
        t = 0.0
    else:
        t = ((px - ax) * dx + (py - ay) * dy) / length_sq
        t = min(max(t, 0.0), 1.0)
    cx = ax + t * dx
    cy = ay + t * dy
    return (px - cx) ** 2 + (py - cy) ** 2


def point_in_polygon(pt: Point, vertices: Sequence[Point]) -> bool:
    """Even-odd containment test against an implicitly closed polygon.

    Points within ``EDGE_EPSILON`` of any edge are classified inside.
    Self-intersecting polygons are legal; the even-odd rule decides.
    """
    if len(vertices) < 3:
        raise ValueError("degenerate polygon")

    inside = False
    n = len(vertices)
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        # Half-open crossing rule: each crossing of the rightward ray is
        # counted exactly once, horizontal edges never cross.
        if (a.y > pt.y) != (b.y > pt.y):
            t = (pt.y - a.y) / (b.y - a.y)
            x_cross = a.x + t * (b.x - a.x)
            if pt.x < x_cross:
                inside = not inside
    if inside:
        return True

    eps_sq = EDGE_EPSILON * EDGE_EPSILON
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        if _segment_distance_sq(pt.x, pt.y, a.x, a.y, b.x, b.y) <= eps_sq:
            return True
    return False
