"""Canonical shape documents and change notification.

A ShapeDocument is the pure-JSON form of a stage and the stable wire format
between the core, files, the bridge and the UI:

    {"bounds": {"width": W, "height": H},
     "layers": [{"id": I, "shapes": [
         {"id": I, "kind": "polygon"|"rectangle",
          "vertices": [[x, y], ...],   # effective: translation applied
          "style": "name"}]}]}

Documents are pure: keys beginning with ``"$$"`` mark transient state and
are tolerated on input but never emitted. Integral numbers serialize as
integers, everything else with shortest round-trip floats, so one
serialization pass is a fixpoint.
"""

from __future__ import annotations

import json
import math
from typing import Any, Callable

from shapestage.geometry import Point
from shapestage.scene import ChangeEvent, Shape, Stage, StageBounds

__all__ = [
    "ChangeEvent",
    "to_document",
    "from_document",
    "document_to_json",
    "document_from_json",
    "subscribe",
    "unsubscribe",
]

TRANSIENT_PREFIX = "$$"

_KINDS = ("rectangle", "polygon")


def _num(value: float) -> int | float:
    v = float(value)
    return int(v) if v.is_integer() else v


def to_document(stage: Stage) -> dict:
    """Canonical JSON object for a stage: z-ordered, effective coordinates,
    no transient keys, no version counter."""
    return {
        "bounds": {"width": stage.bounds.width, "height": stage.bounds.height},
        "layers": [
            {
                "id": layer.id,
                "shapes": [
                    {
                        "id": shape.id,
                        "kind": shape.kind,
                        "vertices": [[_num(v.x), _num(v.y)] for v in shape.effective_vertices()],
                        "style": shape.style,
                    }
                    for shape in layer.shapes
                ],
            }
            for layer in stage.layers
        ],
    }


def _malformed(detail: str) -> ValueError:
    return ValueError(f"malformed document: {detail}")


def _strip_transient(value: Any) -> Any:
    if isinstance(value, dict):
        return {
            k: _strip_transient(v)
            for k, v in value.items()
            if not (isinstance(k, str) and k.startswith(TRANSIENT_PREFIX))
        }
    if isinstance(value, list):
        return [_strip_transient(v) for v in value]
    return value


def _require_keys(obj: Any, keys: set[str], where: str) -> None:
    if not isinstance(obj, dict):
        raise _malformed(f"{where} is not an object")
    if set(obj.keys()) != keys:
        raise _malformed(f"{where} keys {sorted(obj.keys())} != {sorted(keys)}")


def _check_id(value: Any, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise _malformed(f"{where} id must be a positive integer")
    return value


def _parse_vertex(value: Any) -> Point:
    if (
        not isinstance(value, list)
        or len(value) != 2
        or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in value)
        or not all(math.isfinite(c) for c in value)
    ):
        raise _malformed(f"bad vertex {value!r}")
    return Point(float(value[0]), float(value[1]))


def from_document(doc: dict) -> Stage:
    """Rebuild a stage from a document. Transient ``$$`` keys are dropped;
    anything else off-schema raises. Vertices become base vertices with
    translation (0, 0), so re-serialization reproduces the input exactly."""
    doc = _strip_transient(doc)
    _require_keys(doc, {"bounds", "layers"}, "document")
    _require_keys(doc["bounds"], {"width", "height"}, "bounds")
    width = doc["bounds"]["width"]
    height = doc["bounds"]["height"]
    for dim in (width, height):
        if not isinstance(dim, int) or isinstance(dim, bool) or dim <= 0:
            raise _malformed("bounds must be positive integers")
    if not isinstance(doc["layers"], list):
        raise _malformed("layers is not an array")

    stage = Stage(StageBounds(width, height))
    seen_ids: set[int] = set()

    def claim(raw_id: Any, where: str) -> int:
        out = _check_id(raw_id, where)
        if out in seen_ids:
            raise _malformed(f"duplicate id {out}")
        seen_ids.add(out)
        return out

    from shapestage.scene import Layer, _is_axis_aligned_rect

    for raw_layer in doc["layers"]:
        _require_keys(raw_layer, {"id", "shapes"}, "layer")
        layer = Layer(claim(raw_layer["id"], "layer"))
        if not isinstance(raw_layer["shapes"], list):
            raise _malformed("shapes is not an array")
        for raw_shape in raw_layer["shapes"]:
            _require_keys(raw_shape, {"id", "kind", "vertices", "style"}, "shape")
            if raw_shape["kind"] not in _KINDS:
                raise _malformed(f"unknown kind {raw_shape['kind']!r}")
            if not isinstance(raw_shape["style"], str):
                raise _malformed("style must be a string")
            if not isinstance(raw_shape["vertices"], list):
                raise _malformed("vertices is not an array")
            vertices = tuple(_parse_vertex(v) for v in raw_shape["vertices"])
            if len(vertices) < 3:
                raise _malformed("degenerate polygon")
            for a, b in zip(vertices, vertices[1:]):
                if a == b:
                    raise _malformed("duplicate consecutive vertices")
            if raw_shape["kind"] == "rectangle" and not _is_axis_aligned_rect(vertices):
                raise _malformed("rectangle vertices are not an axis-aligned rectangle")
            for pt in vertices:
                if not stage.bounds.contains(pt):
                    raise ValueError("document violates containment")
            layer.shapes.append(
                Shape(
                    id=claim(raw_shape["id"], "shape"),
                    kind=raw_shape["kind"],
                    base_vertices=vertices,
                    style=raw_shape["style"],
                )
            )
        stage.layers.append(layer)

    stage._next_id = max(seen_ids, default=0) + 1
    return stage


def document_to_json(doc: dict, pretty: bool = False) -> str:
    """Serialize a document deterministically (UTF-8 friendly, LF endings
    when pretty)."""
    if pretty:
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)


def document_from_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _malformed(str(exc)) from None
    if not isinstance(doc, dict):
        raise _malformed("top level is not an object")
    return doc


def subscribe(stage: Stage, observer: Callable[[ChangeEvent], None]) -> None:
    """Register for one synchronous ChangeEvent per mutation, in order.
    Subscribing an already-subscribed observer is a no-op."""
    if observer not in stage._observers:
        stage._observers.append(observer)


def unsubscribe(stage: Stage, observer: Callable[[ChangeEvent], None]) -> None:
    """Remove an observer; unknown observers are ignored."""
    try:
        stage._observers.remove(observer)
    except ValueError:
        pass
