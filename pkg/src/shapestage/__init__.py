"""shapestage: a bounded 2D stage of draggable rectangles and polygons.

Core pieces:

- :mod:`shapestage.geometry` -- bounding containers and point-in-polygon.
- :mod:`shapestage.scene` -- the retained stage/layer/shape graph with the
  drag clamp that keeps every shape inside the canvas.
- :mod:`shapestage.binding` -- canonical JSON documents and change events.
- :mod:`shapestage.render` -- deterministic software rasterizer with PPM I/O.
- :mod:`shapestage.bench` -- rendering-scalability benchmark and CLI.
- :mod:`shapestage.bridge` -- flat, host-agnostic call surface for UIs.
"""

from shapestage.geometry import Aabb, DiagonalBox, Point, aabb_of, diagonal_box_of, point_in_polygon
from shapestage.scene import Layer, Shape, Stage, StageBounds, clamp_translation

__all__ = [
    "Aabb",
    "DiagonalBox",
    "Point",
    "aabb_of",
    "diagonal_box_of",
    "point_in_polygon",
    "Layer",
    "Shape",
    "Stage",
    "StageBounds",
    "clamp_translation",
]

__version__ = "0.1.0"
