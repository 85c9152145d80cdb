import random

import pytest

from shapestage.geometry import Point, aabb_of
from shapestage.scene import Shape, Stage, StageBounds, clamp_translation, stage_new
from support import build_random_stage, exhaustive_clamp_oracle, random_polygon_vertices


def _inside(stage, shape):
    box = shape.effective_aabb()
    return (
        box.min_x >= 0
        and box.min_y >= 0
        and box.max_x <= stage.bounds.width
        and box.max_y <= stage.bounds.height
    )


class TestStageNew:
    def test_empty_at_version_zero(self):
        stage = stage_new(StageBounds(100, 100))
        assert stage.layers == [] and stage.version == 0

    def test_minimal_bounds(self):
        assert stage_new(StageBounds(1, 1)).bounds == StageBounds(1, 1)

    def test_nonpositive_dimension_rejected(self):
        with pytest.raises(ValueError):
            StageBounds(0, 5)


class TestPolygonBuilder:
    def test_triangle(self):
        stage = stage_new(StageBounds(100, 100))
        b = stage.begin_polygon()
        for pt in (Point(0, 0), Point(10, 0), Point(5, 8)):
            b.add_vertex(pt)
        shape = b.close()
        assert shape.kind == "polygon"
        assert shape.translation == Point(0, 0)
        assert stage.version == 1

    def test_too_few_vertices(self):
        stage = stage_new(StageBounds(100, 100))
        b = stage.begin_polygon()
        b.add_vertex(Point(0, 0))
        b.add_vertex(Point(10, 0))
        with pytest.raises(ValueError, match="degenerate polygon"):
            b.close()

    def test_consecutive_duplicate_rejected(self):
        stage = stage_new(StageBounds(100, 100))
        b = stage.begin_polygon()
        b.add_vertex(Point(0, 0))
        with pytest.raises(ValueError, match="duplicate vertex"):
            b.add_vertex(Point(0, 0))

    def test_vertex_out_of_bounds_rejected(self):
        stage = stage_new(StageBounds(100, 100))
        b = stage.begin_polygon()
        with pytest.raises(ValueError, match="vertex out of bounds"):
            b.add_vertex(Point(101, 0))

    def test_failed_close_does_not_bump_version(self):
        stage = stage_new(StageBounds(100, 100))
        b = stage.begin_polygon()
        b.add_vertex(Point(0, 0))
        b.add_vertex(Point(1, 0))
        with pytest.raises(ValueError):
            b.close()
        assert stage.version == 0


def _shape(verts, shape_id=1):
    return Shape(id=shape_id, kind="polygon", base_vertices=tuple(verts))


BOX_SHAPE = _shape([Point(10, 10), Point(20, 10), Point(20, 20), Point(10, 20)])
BOUNDS = StageBounds(100, 100)


class TestClampTranslation:
    def test_identity_when_inside(self):
        assert clamp_translation(BOX_SHAPE, Point(0, 0), BOUNDS) == Point(0, 0)

    def test_right_edge_pinned(self):
        assert clamp_translation(BOX_SHAPE, Point(95, 0), BOUNDS) == Point(80, 0)

    def test_min_edge_pinned_to_zero(self):
        assert clamp_translation(BOX_SHAPE, Point(-15, -13), BOUNDS) == Point(-10, -10)

    def test_oversized_shape_pins_top_left(self):
        wide = _shape([Point(0, 0), Point(150, 0), Point(150, 10), Point(0, 10)])
        applied = clamp_translation(wide, Point(30, 5), BOUNDS)
        assert applied == Point(0, 5)

    def test_matches_exhaustive_integer_oracle(self):
        rng = random.Random(5)
        bounds = StageBounds(50, 50)
        for case in range(200):
            shape = _shape(random_polygon_vertices(rng, bounds, 7, integer=True))
            proposed = Point(float(rng.randint(-100, 100)), float(rng.randint(-100, 100)))
            applied = clamp_translation(shape, proposed, bounds)
            assert (applied.x, applied.y) == exhaustive_clamp_oracle(shape, proposed, bounds)

    def test_idempotent_and_identity_on_feasible(self):
        rng = random.Random(6)
        bounds = StageBounds(50, 50)
        for case in range(200):
            shape = _shape(random_polygon_vertices(rng, bounds, 5))
            proposed = Point(rng.uniform(-120, 120), rng.uniform(-120, 120))
            once = clamp_translation(shape, proposed, bounds)
            assert clamp_translation(shape, once, bounds) == once
            box = aabb_of(shape.base_vertices)
            feasible = (
                box.min_x + proposed.x >= 0
                and box.max_x + proposed.x <= bounds.width
                and box.min_y + proposed.y >= 0
                and box.max_y + proposed.y <= bounds.height
            )
            if feasible:
                assert once == proposed


class TestDrag:
    def _stage_with_box(self):
        stage = stage_new(StageBounds(100, 100))
        shape = stage.add_rectangle(10, 10, 20, 20)
        return stage, shape

    def test_feasible_drag_applies_exactly(self):
        stage, shape = self._stage_with_box()
        assert stage.drag(shape.id, Point(30, 40)) == Point(30, 40)
        assert shape.translation == Point(30, 40)

    def test_drag_past_right_edge_pins_flush(self):
        stage, shape = self._stage_with_box()
        applied = stage.drag(shape.id, Point(500, 0))
        assert applied == Point(80, 0)
        assert shape.effective_aabb().max_x == 100

    def test_unknown_shape(self):
        stage, _ = self._stage_with_box()
        with pytest.raises(KeyError, match="no such shape"):
            stage.drag(999, Point(0, 0))

    def test_fuzzed_drags_preserve_containment(self):
        rng = random.Random(17)
        stage = stage_new(StageBounds(80, 60))
        shapes = []
        for _ in range(5):
            b = stage.begin_polygon()
            for pt in random_polygon_vertices(rng, stage.bounds, rng.randint(3, 7)):
                b.add_vertex(pt)
            shapes.append(b.close())
        for _ in range(10_000):
            shape = rng.choice(shapes)
            before = stage.version
            stage.drag(shape.id, Point(rng.uniform(-200, 200), rng.uniform(-200, 200)))
            assert stage.version == before + 1
            assert _inside(stage, shape)


class TestHitTest:
    def test_empty_stage(self):
        assert stage_new(StageBounds(10, 10)).hit_test(Point(5, 5)) is None

    def test_topmost_wins_in_overlap(self):
        stage = stage_new(StageBounds(100, 100))
        stage.add_rectangle(0, 0, 50, 50)
        top = stage.add_rectangle(25, 25, 75, 75)
        assert stage.hit_test(Point(40, 40)) == top.id

    def test_matches_brute_force_reverse_z_order(self):
        rng = random.Random(31)
        stage = build_random_stage(rng, max_shapes=12)
        while sum(1 for _ in stage.iter_shapes()) < 8:
            stage = build_random_stage(rng, max_shapes=12)
        from shapestage.geometry import point_in_polygon

        for _ in range(500):
            probe = Point(rng.uniform(0, stage.bounds.width), rng.uniform(0, stage.bounds.height))
            expected = None
            for shape in reversed(list(stage.iter_shapes())):
                if point_in_polygon(probe, shape.effective_vertices()):
                    expected = shape.id
                    break
            assert stage.hit_test(probe) == expected

    def test_hit_test_is_read_only(self):
        stage = stage_new(StageBounds(10, 10))
        stage.add_rectangle(1, 1, 5, 5)
        before = stage.version
        stage.hit_test(Point(3, 3))
        assert stage.version == before


class TestStructuralEdits:
    def test_remove_only_shape(self):
        stage = stage_new(StageBounds(10, 10))
        shape = stage.add_rectangle(1, 1, 5, 5)
        stage.remove_shape(shape.id)
        assert list(stage.iter_shapes()) == []

    def test_move_bottom_to_top(self):
        stage = stage_new(StageBounds(100, 100))
        a = stage.add_rectangle(0, 0, 10, 10)
        b = stage.add_rectangle(0, 0, 10, 10)
        c = stage.add_rectangle(0, 0, 10, 10)
        stage.move_shape_to_top(a.id)
        assert [s.id for s in stage.iter_shapes()] == [b.id, c.id, a.id]

    def test_unknown_ids_rejected(self):
        stage = stage_new(StageBounds(10, 10))
        with pytest.raises(KeyError, match="no such shape"):
            stage.remove_shape(1)
        with pytest.raises(KeyError, match="no such shape"):
            stage.move_shape_to_top(1)

    def test_random_edit_sequences_keep_ids_unique_and_version_monotone(self):
        rng = random.Random(43)
        stage = stage_new(StageBounds(60, 60))
        for _ in range(2000):
            ids = [s.id for s in stage.iter_shapes()]
            assert len(ids) == len(set(ids))
            before = stage.version
            op = rng.random()
            if op < 0.4 or not ids:
                b = stage.begin_polygon()
                for pt in random_polygon_vertices(rng, stage.bounds, 3):
                    b.add_vertex(pt)
                b.close()
            elif op < 0.6:
                stage.remove_shape(rng.choice(ids))
            elif op < 0.8:
                stage.move_shape_to_top(rng.choice(ids))
            else:
                stage.drag(rng.choice(ids), Point(rng.uniform(-100, 100), rng.uniform(-100, 100)))
            assert stage.version == before + 1
            for shape in stage.iter_shapes():
                assert _inside(stage, shape)
