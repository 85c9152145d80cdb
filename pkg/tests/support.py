"""Shared fuzzers and independent oracles used across the test suite."""

from __future__ import annotations

import random

import numpy as np

from shapestage.geometry import Point, aabb_of
from shapestage.scene import Shape, Stage, StageBounds


def crossing_number_inside(x: float, y: float, vertices: list[tuple[float, float]]) -> bool:
    """Independent even-odd oracle (classic crossing-number loop over
    upward/downward edges). Valid away from edges."""
    crossings = 0
    n = len(vertices)
    for i in range(n):
        x0, y0 = vertices[i]
        x1, y1 = vertices[(i + 1) % n]
        upward = y0 <= y < y1
        downward = y1 <= y < y0
        if upward or downward:
            # x coordinate where the edge meets the horizontal through y.
            if x < x0 + (y - y0) * (x1 - x0) / (y1 - y0):
                crossings += 1
    return crossings % 2 == 1


def distance_to_edges(x: float, y: float, vertices: list[tuple[float, float]]) -> float:
    """Min distance from (x, y) to the polygon outline."""
    best = float("inf")
    n = len(vertices)
    for i in range(n):
        ax, ay = vertices[i]
        bx, by = vertices[(i + 1) % n]
        dx, dy = bx - ax, by - ay
        length_sq = dx * dx + dy * dy
        if length_sq == 0.0:
            t = 0.0
        else:
            t = min(max(((x - ax) * dx + (y - ay) * dy) / length_sq, 0.0), 1.0)
        best = min(best, ((x - ax - t * dx) ** 2 + (y - ay - t * dy) ** 2) ** 0.5)
    return best


def random_polygon_vertices(rng: random.Random, bounds: StageBounds, n: int, integer: bool = False) -> list[Point]:
    """n random in-bounds vertices with no consecutive duplicates."""
    pts: list[Point] = []
    while len(pts) < n:
        if integer:
            pt = Point(float(rng.randint(0, bounds.width)), float(rng.randint(0, bounds.height)))
        else:
            pt = Point(rng.uniform(0, bounds.width), rng.uniform(0, bounds.height))
        if pts and pts[-1] == pt:
            continue
        if len(pts) == n - 1 and pt == pts[0]:
            continue  # keep the closing edge non-degenerate too
        pts.append(pt)
    return pts


def exhaustive_clamp_oracle(
    shape: Shape, proposed: Point, bounds: StageBounds, search: int = 100
) -> tuple[float, float]:
    """Search all integer offsets in [-search, search]^2 for the feasible one
    minimizing Chebyshev distance to the proposal (ties broken by L1, which
    is unique for this constraint set)."""
    box = aabb_of(shape.base_vertices)
    d = np.arange(-search, search + 1, dtype=np.float64)
    dx = d[None, :]
    dy = d[:, None]
    feasible = (
        (box.min_x + dx >= 0)
        & (box.max_x + dx <= bounds.width)
        & (box.min_y + dy >= 0)
        & (box.max_y + dy <= bounds.height)
    )
    assert feasible.any(), "oracle search window misses every feasible offset"
    cheb = np.maximum(np.abs(dx - proposed.x), np.abs(dy - proposed.y))
    cheb = np.where(feasible, cheb, np.inf)
    best_cheb = cheb.min()
    candidates = cheb == best_cheb
    l1 = np.abs(dx - proposed.x) + np.abs(dy - proposed.y)
    l1 = np.where(candidates, l1, np.inf)
    flat = int(np.argmin(l1))
    j, i = divmod(flat, l1.shape[1])
    assert np.count_nonzero(l1 == l1.flat[flat]) == 1, "tie-break failed to be unique"
    return (float(d[i]), float(d[j]))


def random_boundary_script(rng: random.Random, n_ops: int = 30) -> list[tuple]:
    """Random script of bridge-level operations, including invalid ones.
    Shapes are referenced by z-order index so the same script can replay
    against the bridge and directly against the core."""
    ops: list[tuple] = []
    for _ in range(n_ops):
        roll = rng.random()
        if roll < 0.35:
            ops.append(("begin",))
            n = rng.randint(2, 6)  # sometimes too few for a valid close
            for _ in range(n):
                if rng.random() < 0.1:
                    ops.append(("vertex", rng.uniform(-20, 120), rng.uniform(-20, 120)))
                else:
                    ops.append(("vertex", rng.uniform(0, 100), rng.uniform(0, 80)))
            ops.append(("close",))
        elif roll < 0.6:
            ops.append(
                ("drag", rng.randint(0, 5), rng.uniform(-200, 200), rng.uniform(-200, 200))
            )
        elif roll < 0.75:
            ops.append(("hit", rng.uniform(-10, 110), rng.uniform(-10, 90)))
        elif roll < 0.85:
            ops.append(("vertex", rng.uniform(0, 100), rng.uniform(0, 80)))  # maybe no open polygon
        elif roll < 0.95:
            ops.append(("close",))  # maybe no open polygon
        else:
            ops.append(("begin",))  # maybe discards an open polygon
    return ops


def run_script_direct(width: int, height: int, ops: list[tuple]) -> str:
    """Reference interpreter: the same boundary semantics applied straight
    to the core, bypassing the bridge."""
    from shapestage.binding import document_to_json, to_document

    stage = Stage(StageBounds(width, height))
    builder = None
    for op in ops:
        kind = op[0]
        if kind == "begin":
            builder = stage.begin_polygon()
        elif kind == "vertex":
            if builder is not None:
                try:
                    builder.add_vertex(Point(op[1], op[2]))
                except ValueError:
                    pass
        elif kind == "close":
            if builder is not None:
                try:
                    builder.close()
                except ValueError:
                    pass
                else:
                    builder = None
        elif kind == "drag":
            shapes = list(stage.iter_shapes())
            if op[1] < len(shapes):
                shape = shapes[op[1]]
                start = shape.translation
                stage.drag(shape.id, Point(start.x + op[2], start.y + op[3]))
        elif kind == "hit":
            stage.hit_test(Point(op[1], op[2]))
    return document_to_json(to_document(stage))


def run_script_via_bridge(width: int, height: int, ops: list[tuple]) -> str:
    """Replay a script through the flat boundary only."""
    import json

    from shapestage import bridge

    handle = bridge.session_create(width, height)
    assert handle > 0
    for op in ops:
        kind = op[0]
        if kind == "begin":
            assert bridge.begin_polygon(handle) == bridge.OK
        elif kind == "vertex":
            bridge.add_vertex(handle, op[1], op[2])
        elif kind == "close":
            bridge.close_polygon(handle)
        elif kind == "drag":
            doc = json.loads(bridge.document(handle))
            shape_ids = [s["id"] for layer in doc["layers"] for s in layer["shapes"]]
            if op[1] < len(shape_ids):
                token = bridge.drag_begin(handle, shape_ids[op[1]])
                assert token > 0
                assert bridge.drag_move(token, op[2], op[3]) is not None
                assert bridge.drag_end(token) == bridge.OK
        elif kind == "hit":
            bridge.hit(handle, op[1], op[2])
    out = bridge.document(handle)
    bridge.session_destroy(handle)
    return out


def build_random_stage(rng: random.Random, max_shapes: int = 6) -> Stage:
    """Random stage: 1-2 layers, a mix of polygons and rectangles, some
    dragged to random (clamped) positions."""
    bounds = StageBounds(rng.randint(20, 120), rng.randint(20, 120))
    stage = Stage(bounds)
    n_layers = rng.randint(0, 2)
    for _ in range(n_layers):
        stage.add_layer()
    for _ in range(rng.randint(0, max_shapes)):
        if rng.random() < 0.3:
            x0 = rng.uniform(0, bounds.width - 2)
            y0 = rng.uniform(0, bounds.height - 2)
            shape = stage.add_rectangle(
                x0,
                y0,
                rng.uniform(x0 + 1, bounds.width),
                rng.uniform(y0 + 1, bounds.height),
                style=rng.choice(["default", "accent"]),
            )
        else:
            builder = stage.begin_polygon(style=rng.choice(["default", "accent"]))
            for pt in random_polygon_vertices(rng, bounds, rng.randint(3, 8)):
                builder.add_vertex(pt)
            shape = builder.close()
        if rng.random() < 0.5:
            stage.drag(shape.id, Point(rng.uniform(-150, 150), rng.uniform(-150, 150)))
    return stage
