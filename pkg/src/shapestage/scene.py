"""Retained scene graph: stage, layers, shapes, z-order, and the drag clamp.

A :class:`Stage` is single-owner mutable state; callers serialize mutations.
Every mutation bumps the stage's version counter and notifies subscribed
observers (see :mod:`shapestage.binding`). The central invariant is
containment: after construction, every shape's effective bounding box stays
inside the stage bounds, enforced by :func:`clamp_translation` on every drag
and by vertex validation at build time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence

from shapestage.geometry import Aabb, Point, aabb_of, point_in_polygon

ShapeKind = str  # "rectangle" | "polygon"


@dataclass(frozen=True)
class StageBounds:
    """Canvas extent in pixels. Shapes are constrained to [0,w] x [0,h]."""

    width: int
    height: int

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError(f"stage bounds must be positive, got {self.width}x{self.height}")

    def contains(self, pt: Point) -> bool:
        return 0.0 <= pt.x <= self.width and 0.0 <= pt.y <= self.height


@dataclass(frozen=True)
class ChangeEvent:
    """One mutation notification: the new version and what happened."""

    version: int
    kind: str  # shape-added | shape-removed | shape-moved | order-changed


@dataclass
class Shape:
    """A rectangle or polygon: immutable base vertices plus a translation.

    Rectangles are stored as their 4 corner vertices so the clamp, hit-test
    and fill paths are shared with polygons.
    """

    id: int
    kind: ShapeKind
    base_vertices: tuple[Point, ...]
    translation: Point = Point(0.0, 0.0)
    style: str = "default"

    def effective_vertices(self) -> tuple[Point, ...]:
        dx, dy = self.translation.x, self.translation.y
        return tuple(v.translated(dx, dy) for v in self.base_vertices)

    def effective_aabb(self) -> Aabb:
        box = aabb_of(self.base_vertices)
        dx, dy = self.translation.x, self.translation.y
        return Aabb(box.min_x + dx, box.min_y + dy, box.max_x + dx, box.max_y + dy)


@dataclass
class Layer:
    id: int
    shapes: list[Shape] = field(default_factory=list)


def _clamp_axis(lo: float, hi: float, proposed: float, extent: float) -> float:
    if hi - lo > extent:
        # Oversized shape: keep its min edge pinned to 0 so the top-left
        # corner stays visible.
        return -lo
    return min(max(proposed, -lo), extent - hi)


def clamp_translation(shape: Shape, proposed: Point, bounds: StageBounds) -> Point:
    """Nearest feasible translation keeping the shape's AABB on the stage.

    The x and y components clamp independently (the AABB constraint
    decomposes per axis), which is exactly the Chebyshev-nearest feasible
    offset to ``proposed``.
    """
    box = aabb_of(shape.base_vertices)
    return Point(
        _clamp_axis(box.min_x, box.max_x, proposed.x, float(bounds.width)),
        _clamp_axis(box.min_y, box.max_y, proposed.y, float(bounds.height)),
    )


class PolygonBuilder:
    """Accumulates validated vertices, then closes into a polygon shape.

    Vertices must lie inside the stage bounds (drawing starts inside the
    canvas by construction) and consecutive duplicates are rejected.
    """

    def __init__(self, stage: "Stage", style: str, layer_id: Optional[int]):
        self._stage = stage
        self._style = style
        self._layer_id = layer_id
        self._vertices: list[Point] = []
        self._closed = False

    def add_vertex(self, pt: Point) -> None:
        if self._closed:
            raise RuntimeError("builder already closed")
        if not self._stage.bounds.contains(pt):
            raise ValueError(f"vertex out of bounds: ({pt.x}, {pt.y})")
        if self._vertices and self._vertices[-1] == pt:
            raise ValueError("duplicate vertex")
        self._vertices.append(pt)

    def close(self) -> Shape:
        if self._closed:
            raise RuntimeError("builder already closed")
        if len(self._vertices) < 3:
            raise ValueError("degenerate polygon")
        self._closed = True
        return self._stage._add_shape("polygon", tuple(self._vertices), self._style, self._layer_id)


def _is_axis_aligned_rect(vertices: Sequence[Point]) -> bool:
    if len(vertices) != 4:
        return False
    xs = sorted({v.x for v in vertices})
    ys = sorted({v.y for v in vertices})
    if len(xs) != 2 or len(ys) != 2:
        return False
    corners = {(x, y) for x in xs for y in ys}
    return {(v.x, v.y) for v in vertices} == corners


class Stage:
    """The bounded drawing surface: ordered layers of shapes.

    Later layers (and later shapes within a layer) draw on top. The
    ``version`` counter strictly increases on every mutation; observers are
    notified synchronously after each one and must not mutate re-entrantly.
    """

    def __init__(self, bounds: StageBounds, background: Optional[str] = None):
        self.bounds = bounds
        self.background = background
        self.layers: list[Layer] = []
        self.version = 0
        self._next_id = 1
        self._observers: list[Callable[[ChangeEvent], None]] = []
        self._notifying = False

    # -- mutation plumbing -------------------------------------------------

    def _take_id(self) -> int:
        out = self._next_id
        self._next_id += 1
        return out

    def _commit(self, kind: str) -> None:
        if self._notifying:
            raise RuntimeError("re-entrant stage mutation from observer")
        self.version += 1
        event = ChangeEvent(self.version, kind)
        self._notifying = True
        try:
            for observer in list(self._observers):
                observer(event)
        finally:
            self._notifying = False

    def _guard(self) -> None:
        if self._notifying:
            raise RuntimeError("re-entrant stage mutation from observer")

    # -- structure ---------------------------------------------------------

    def add_layer(self) -> int:
        self._guard()
        layer = Layer(self._take_id())
        self.layers.append(layer)
        self._commit("order-changed")
        return layer.id

    def _target_layer(self, layer_id: Optional[int]) -> Layer:
        if layer_id is None:
            if not self.layers:
                # Lazily created as part of the same mutation; no extra
                # version bump.
                self.layers.append(Layer(self._take_id()))
            return self.layers[-1]
        for layer in self.layers:
            if layer.id == layer_id:
                return layer
        raise KeyError(f"no such layer: {layer_id}")

    def _add_shape(
        self,
        kind: ShapeKind,
        vertices: tuple[Point, ...],
        style: str,
        layer_id: Optional[int],
        shape_id: Optional[int] = None,
        translation: Point = Point(0.0, 0.0),
    ) -> Shape:
        self._guard()
        shape = Shape(
            id=self._take_id() if shape_id is None else shape_id,
            kind=kind,
            base_vertices=vertices,
            translation=translation,
            style=style,
        )
        self._target_layer(layer_id).shapes.append(shape)
        self._commit("shape-added")
        return shape

    def begin_polygon(self, style: str = "default", layer_id: Optional[int] = None) -> PolygonBuilder:
        return PolygonBuilder(self, style, layer_id)

    def add_rectangle(
        self,
        min_x: float,
        min_y: float,
        max_x: float,
        max_y: float,
        style: str = "default",
        layer_id: Optional[int] = None,
    ) -> Shape:
        if not (min_x < max_x and min_y < max_y):
            raise ValueError("rectangle must have positive extent")
        corners = (
            Point(min_x, min_y),
            Point(max_x, min_y),
            Point(max_x, max_y),
            Point(min_x, max_y),
        )
        for pt in corners:
            if not self.bounds.contains(pt):
                raise ValueError(f"vertex out of bounds: ({pt.x}, {pt.y})")
        return self._add_shape("rectangle", corners, style, layer_id)

    # -- lookup ------------------------------------------------------------

    def iter_shapes(self) -> Iterator[Shape]:
        """All shapes in z-order, bottom-most first."""
        for layer in self.layers:
            yield from layer.shapes

    def find_shape(self, shape_id: int) -> Shape:
        for shape in self.iter_shapes():
            if shape.id == shape_id:
                return shape
        raise KeyError(f"no such shape: {shape_id}")

    def hit_test(self, pt: Point) -> Optional[int]:
        """Topmost shape containing pt, or None. Read-only."""
        for layer in reversed(self.layers):
            for shape in reversed(layer.shapes):
                if point_in_polygon(pt, shape.effective_vertices()):
                    return shape.id
        return None

    # -- edits -------------------------------------------------------------

    def drag(self, shape_id: int, proposed: Point) -> Point:
        """Set a shape's translation to the clamped proposal; returns what
        was applied so the caller can reposition its visual."""
        self._guard()
        shape = self.find_shape(shape_id)
        applied = clamp_translation(shape, proposed, self.bounds)
        shape.translation = applied
        self._commit("shape-moved")
        return applied

    def remove_shape(self, shape_id: int) -> None:
        self._guard()
        for layer in self.layers:
            for i, shape in enumerate(layer.shapes):
                if shape.id == shape_id:
                    del layer.shapes[i]
                    self._commit("shape-removed")
                    return
        raise KeyError(f"no such shape: {shape_id}")

    def move_shape_to_top(self, shape_id: int) -> None:
        self._guard()
        for layer in self.layers:
            for i, shape in enumerate(layer.shapes):
                if shape.id == shape_id:
                    del layer.shapes[i]
                    self.layers[-1].shapes.append(shape)
                    self._commit("order-changed")
                    return
        raise KeyError(f"no such shape: {shape_id}")


def stage_new(bounds: StageBounds) -> Stage:
    """Fresh empty stage at version 0."""
    return Stage(bounds)
