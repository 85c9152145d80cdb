"""Rendering-scalability benchmark: time vs. number of polygon shapes.

Generates seeded random scenes, times the rasterizer (median of trials,
warm-up render discarded), fits a least-squares line to median time per
shape count, and emits machine-readable CSV.

CLI:

    bench --counts 100,500,1000,5000 --vertices 8 --trials 5 \\
          --width 1024 --height 768 --seed 42 --out results.csv
"""

from __future__ import annotations

import argparse
import math
import random
import statistics
import sys
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, TextIO

from shapestage.geometry import Point
from shapestage.render import Style, render
from shapestage.scene import Shape, Stage, StageBounds

DEFAULT_STYLES = {
    "default": Style(fill=(200, 60, 60)),
    "marker": Style(fill=(0, 0, 255)),
}

CSV_HEADER = "n_shapes,n_vertices,trial,elapsed_ms"


@dataclass(frozen=True)
class BenchRecord:
    n_shapes: int
    n_vertices: int
    trial: int
    elapsed_ms: float


@dataclass(frozen=True)
class LinearFit:
    slope: float
    intercept: float
    r2: float


@dataclass(frozen=True)
class BenchConfig:
    shape_counts: tuple[int, ...] = (100, 500, 1000, 5000)
    vertices_per_shape: int = 8
    trials: int = 5
    stage: StageBounds = field(default_factory=lambda: StageBounds(1024, 768))
    seed: int = 42

    def __post_init__(self) -> None:
        if any(n < 0 for n in self.shape_counts):
            raise ValueError("shape counts must be >= 0")
        if self.vertices_per_shape < 3:
            raise ValueError("need at least 3 vertices per shape")
        if self.trials < 1:
            raise ValueError("need at least one trial")


def _random_polygon(rng: random.Random, bounds: StageBounds, n_vertices: int) -> list[Point]:
    """Random simple-construction polygon: points in a random sub-box,
    ordered by angle around their centroid."""
    box_w = rng.uniform(8.0, min(60.0, bounds.width))
    box_h = rng.uniform(8.0, min(60.0, bounds.height))
    x0 = rng.uniform(0.0, bounds.width - box_w)
    y0 = rng.uniform(0.0, bounds.height - box_h)
    pts = [Point(x0 + rng.uniform(0, box_w), y0 + rng.uniform(0, box_h)) for _ in range(n_vertices)]
    cx = sum(p.x for p in pts) / n_vertices
    cy = sum(p.y for p in pts) / n_vertices
    pts.sort(key=lambda p: math.atan2(p.y - cy, p.x - cx))
    return pts


def generate_scene(config: BenchConfig, n: int) -> Stage:
    """Deterministic scene of n random polygons; same seed, same scene."""
    rng = random.Random(f"{config.seed}:{n}")
    stage = Stage(config.stage)
    while sum(1 for _ in stage.iter_shapes()) < n:
        pts = _random_polygon(rng, config.stage, config.vertices_per_shape)
        builder = stage.begin_polygon()
        try:
            for pt in pts:
                builder.add_vertex(pt)
            builder.close()
        except ValueError:
            continue  # vanishingly rare duplicate after angle sort; redraw
    return stage


def insert_marker(stage: Stage) -> Shape:
    """Fixed triangle drawn topmost; its rendered pixel set must not depend
    on how many other shapes share the scene."""
    stage.add_layer()
    builder = stage.begin_polygon(style="marker")
    builder.add_vertex(Point(2.0, 2.0))
    builder.add_vertex(Point(14.0, 3.0))
    builder.add_vertex(Point(4.0, 13.0))
    return builder.close()


def fit_line(xs: Sequence[float], ys: Sequence[float]) -> LinearFit:
    """Ordinary least squares y = slope*x + intercept, with R^2."""
    n = len(xs)
    if n < 2:
        raise ValueError("need at least two points to fit a line")
    mean_x = sum(xs) / n
    mean_y = sum(ys) / n
    sxx = sum((x - mean_x) ** 2 for x in xs)
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = mean_y - slope * mean_x
    ss_res = sum((y - (slope * x + intercept)) ** 2 for x, y in zip(xs, ys))
    ss_tot = sum((y - mean_y) ** 2 for y in ys)
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return LinearFit(slope, intercept, r2)


def run(config: BenchConfig) -> tuple[list[BenchRecord], LinearFit]:
    """Benchmark every (count, trial) pair and fit medians per count."""
    records: list[BenchRecord] = []
    for n in config.shape_counts:
        for trial in range(config.trials):
            stage = generate_scene(config, n)
            render(stage, DEFAULT_STYLES)  # warm-up, discarded
            start = time.perf_counter()
            render(stage, DEFAULT_STYLES)
            elapsed_ms = (time.perf_counter() - start) * 1000.0
            records.append(BenchRecord(n, config.vertices_per_shape, trial, elapsed_ms))
    medians = {
        n: statistics.median(r.elapsed_ms for r in records if r.n_shapes == n)
        for n in config.shape_counts
    }
    fit = fit_line([float(n) for n in medians], list(medians.values()))
    return records, fit


def write_csv(records: Iterable[BenchRecord], sink: TextIO) -> None:
    sink.write(CSV_HEADER + "\n")
    for r in records:
        sink.write(f"{r.n_shapes},{r.n_vertices},{r.trial},{r.elapsed_ms!r}\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(prog="bench", description="Rendering scalability benchmark.")
    parser.add_argument("--counts", default="100,500,1000,5000", help="comma-separated shape counts")
    parser.add_argument("--vertices", type=int, default=8, help="vertices per generated polygon")
    parser.add_argument("--trials", type=int, default=5, help="timed trials per count")
    parser.add_argument("--width", type=int, default=1024, help="stage width in pixels")
    parser.add_argument("--height", type=int, default=768, help="stage height in pixels")
    parser.add_argument("--seed", type=int, default=42, help="scene-generation seed")
    parser.add_argument("--out", default=None, help="CSV output path (default: stdout)")
    args = parser.parse_args(argv)

    config = BenchConfig(
        shape_counts=tuple(int(tok) for tok in args.counts.split(",") if tok),
        vertices_per_shape=args.vertices,
        trials=args.trials,
        stage=StageBounds(args.width, args.height),
        seed=args.seed,
    )
    records, fit = run(config)
    if args.out is None:
        write_csv(records, sys.stdout)
    else:
        with open(args.out, "w", newline="") as sink:
            write_csv(records, sink)
    print(f"slope_ms_per_shape={fit.slope:.6f} intercept_ms={fit.intercept:.6f} r2={fit.r2:.4f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
