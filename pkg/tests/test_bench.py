import csv
import io

import numpy as np
import pytest

from shapestage.bench import (
    CSV_HEADER,
    DEFAULT_STYLES,
    BenchConfig,
    BenchRecord,
    fit_line,
    generate_scene,
    insert_marker,
    main,
    run,
    write_csv,
)
from shapestage.binding import document_to_json, to_document
from shapestage.render import render
from shapestage.scene import StageBounds

SMALL = BenchConfig(shape_counts=(10, 100), trials=3, stage=StageBounds(200, 150), seed=9)


class TestGenerateScene:
    def test_zero_shapes(self):
        stage = generate_scene(SMALL, 0)
        assert list(stage.iter_shapes()) == []

    def test_same_seed_identical_documents(self):
        a = document_to_json(to_document(generate_scene(SMALL, 50)))
        b = document_to_json(to_document(generate_scene(SMALL, 50)))
        assert a == b

    def test_different_seed_differs(self):
        other = BenchConfig(shape_counts=SMALL.shape_counts, trials=3, stage=SMALL.stage, seed=10)
        assert document_to_json(to_document(generate_scene(SMALL, 50))) != document_to_json(
            to_document(generate_scene(other, 50))
        )

    @pytest.mark.parametrize("n", [1, 25, 200])
    def test_generated_shapes_satisfy_containment(self, n):
        stage = generate_scene(SMALL, n)
        shapes = list(stage.iter_shapes())
        assert len(shapes) == n
        for shape in shapes:
            box = shape.effective_aabb()
            assert box.min_x >= 0 and box.min_y >= 0
            assert box.max_x <= stage.bounds.width and box.max_y <= stage.bounds.height


class TestRun:
    def test_record_count_arithmetic(self):
        records, fit = run(SMALL)
        assert len(records) == len(SMALL.shape_counts) * SMALL.trials
        pairs = {(r.n_shapes, r.trial) for r in records}
        assert pairs == {(n, t) for n in SMALL.shape_counts for t in range(SMALL.trials)}
        assert all(r.elapsed_ms >= 0 for r in records)
        assert np.isfinite([fit.slope, fit.intercept, fit.r2]).all()


class TestMarkerInvariance:
    def test_marker_pixels_independent_of_scene_size(self):
        reference = None
        marker_rgb = np.array(DEFAULT_STYLES["marker"].fill, dtype=np.uint8)
        for n in (0, 10, 100):
            stage = generate_scene(SMALL, n)
            insert_marker(stage)
            fb = render(stage, DEFAULT_STYLES)
            mask = np.all(fb.data == marker_rgb, axis=2)
            assert mask.any()
            if reference is None:
                reference = mask
            else:
                assert np.array_equal(mask, reference)


class TestFitLine:
    def test_recovers_exact_line(self):
        xs = [1.0, 2.0, 3.0, 4.0]
        fit = fit_line(xs, [2 * x + 5 for x in xs])
        assert fit.slope == pytest.approx(2.0)
        assert fit.intercept == pytest.approx(5.0)
        assert fit.r2 == pytest.approx(1.0)

    def test_needs_two_points(self):
        with pytest.raises(ValueError):
            fit_line([1.0], [1.0])


class TestWriteCsv:
    def test_header_only_when_empty(self):
        sink = io.StringIO()
        write_csv([], sink)
        assert sink.getvalue() == CSV_HEADER + "\n"

    def test_two_records_three_lines(self):
        sink = io.StringIO()
        write_csv(
            [BenchRecord(10, 8, 0, 1.5), BenchRecord(10, 8, 1, 2.25)],
            sink,
        )
        assert sink.getvalue().count("\n") == 3

    def test_round_trips_through_csv_parser(self):
        records = [BenchRecord(10, 8, 0, 1.52344), BenchRecord(100, 8, 1, 20.125)]
        sink = io.StringIO()
        write_csv(records, sink)
        rows = list(csv.DictReader(io.StringIO(sink.getvalue())))
        parsed = [
            BenchRecord(int(r["n_shapes"]), int(r["n_vertices"]), int(r["trial"]), float(r["elapsed_ms"]))
            for r in rows
        ]
        assert parsed == records


class TestCli:
    def test_exact_flags_and_fit_summary(self, tmp_path, capsys):
        out = tmp_path / "results.csv"
        code = main(
            [
                "--counts", "5,20",
                "--vertices", "4",
                "--trials", "2",
                "--width", "128",
                "--height", "96",
                "--seed", "42",
                "--out", str(out),
            ]
        )
        assert code == 0
        printed = capsys.readouterr().out
        assert "slope_ms_per_shape=" in printed
        assert "intercept_ms=" in printed
        assert "r2=" in printed
        lines = out.read_text().splitlines()
        assert lines[0] == CSV_HEADER
        assert len(lines) == 1 + 2 * 2
