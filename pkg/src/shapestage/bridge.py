"""Flat, host-agnostic call surface over the scene core.

Only scalars (ints, floats, bools) and JSON strings cross this boundary.
Failures are reported as negative integer codes (or False / None for the
ops whose success value is a bool / compound), with a human-readable
message retrievable via :func:`last_error`. UIs poll :func:`version` once
per frame and refetch :func:`document` on change.

Sessions are independent; calls on one handle must be serialized by the
host.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from shapestage.binding import document_from_json, document_to_json, from_document, to_document
from shapestage.geometry import Point
from shapestage.scene import PolygonBuilder, Stage, StageBounds

OK = 0
ERR_INVALID_HANDLE = -1
ERR_INVALID_ARGUMENT = -2
ERR_DEGENERATE_POLYGON = -3
ERR_NO_SUCH_SHAPE = -4
ERR_DRAG_ACTIVE = -5
ERR_STALE_TOKEN = -6
ERR_NO_OPEN_POLYGON = -7
ERR_MALFORMED_DOCUMENT = -8

NO_HIT = 0


@dataclass
class _Drag:
    handle: int
    shape_id: int
    start: Point


@dataclass
class _Session:
    stage: Stage
    builder: Optional[PolygonBuilder] = None
    drag_token: Optional[int] = None
    error: str = ""


_sessions: dict[int, _Session] = {}
_drags: dict[int, _Drag] = {}
_next_handle = 1
_next_token = 1
_global_error = ""


def reset() -> None:
    """Drop all sessions and drags (test isolation)."""
    global _next_handle, _next_token, _global_error
    _sessions.clear()
    _drags.clear()
    _next_handle = 1
    _next_token = 1
    _global_error = ""


def _fail(handle: Optional[int], message: str) -> None:
    global _global_error
    _global_error = message
    session = _sessions.get(handle) if handle is not None else None
    if session is not None:
        session.error = message


def last_error(handle: Optional[int] = None) -> str:
    """Most recent error message for a session (or globally)."""
    session = _sessions.get(handle) if handle is not None else None
    return session.error if session is not None else _global_error


def session_create(width: int, height: int) -> int:
    """New session around an empty stage; returns a handle > 0."""
    global _next_handle
    try:
        stage = Stage(StageBounds(int(width), int(height)))
    except (ValueError, TypeError) as exc:
        _fail(None, str(exc))
        return ERR_INVALID_ARGUMENT
    handle = _next_handle
    _next_handle += 1
    _sessions[handle] = _Session(stage)
    return handle


def session_destroy(handle: int) -> int:
    if handle not in _sessions:
        _fail(None, f"invalid handle: {handle}")
        return ERR_INVALID_HANDLE
    session = _sessions.pop(handle)
    if session.drag_token is not None:
        _drags.pop(session.drag_token, None)
    return OK


def begin_polygon(handle: int) -> int:
    """Open a fresh polygon; also discards any in-progress one (cancel)."""
    session = _sessions.get(handle)
    if session is None:
        _fail(handle, f"invalid handle: {handle}")
        return ERR_INVALID_HANDLE
    session.builder = session.stage.begin_polygon()
    return OK


def add_vertex(handle: int, x: float, y: float) -> bool:
    """True if accepted; False (not an error) on out-of-bounds/duplicate so
    the UI can give live feedback."""
    session = _sessions.get(handle)
    if session is None:
        _fail(handle, f"invalid handle: {handle}")
        return False
    if session.builder is None:
        _fail(handle, "no open polygon")
        return False
    if not (math.isfinite(x) and math.isfinite(y)):
        _fail(handle, "vertex coordinates must be finite")
        return False
    try:
        session.builder.add_vertex(Point(float(x), float(y)))
    except ValueError as exc:
        _fail(handle, str(exc))
        return False
    return True


def close_polygon(handle: int) -> int:
    """Finish the open polygon; returns its shape id (> 0)."""
    session = _sessions.get(handle)
    if session is None:
        _fail(handle, f"invalid handle: {handle}")
        return ERR_INVALID_HANDLE
    if session.builder is None:
        _fail(handle, "no open polygon")
        return ERR_NO_OPEN_POLYGON
    try:
        shape = session.builder.close()
    except ValueError as exc:
        _fail(handle, str(exc))
        return ERR_DEGENERATE_POLYGON
    session.builder = None
    return shape.id


def drag_begin(handle: int, shape_id: int) -> int:
    """Start a drag; returns a token (> 0). One drag per session."""
    global _next_token
    session = _sessions.get(handle)
    if session is None:
        _fail(handle, f"invalid handle: {handle}")
        return ERR_INVALID_HANDLE
    if session.drag_token is not None:
        _fail(handle, "drag already active")
        return ERR_DRAG_ACTIVE
    try:
        shape = session.stage.find_shape(int(shape_id))
    except KeyError as exc:
        _fail(handle, str(exc))
        return ERR_NO_SUCH_SHAPE
    token = _next_token
    _next_token += 1
    _drags[token] = _Drag(handle, shape.id, shape.translation)
    session.drag_token = token
    return token


def drag_move(token: int, dx: float, dy: float) -> Optional[tuple[float, float]]:
    """Apply a pointer delta (relative to the drag start) through the clamp;
    returns the applied absolute translation, or None on a stale token."""
    drag = _drags.get(token)
    if drag is None:
        _fail(None, f"stale drag token: {token}")
        return None
    if not (math.isfinite(dx) and math.isfinite(dy)):
        _fail(drag.handle, "drag delta must be finite")
        return None
    session = _sessions[drag.handle]
    proposed = Point(drag.start.x + float(dx), drag.start.y + float(dy))
    applied = session.stage.drag(drag.shape_id, proposed)
    return (applied.x, applied.y)


def drag_end(token: int) -> int:
    drag = _drags.pop(token, None)
    if drag is None:
        _fail(None, f"stale drag token: {token}")
        return ERR_STALE_TOKEN
    session = _sessions.get(drag.handle)
    if session is not None and session.drag_token == token:
        session.drag_token = None
    return OK


def hit(handle: int, x: float, y: float) -> int:
    """Topmost shape id at (x, y), or NO_HIT (0)."""
    session = _sessions.get(handle)
    if session is None:
        _fail(handle, f"invalid handle: {handle}")
        return ERR_INVALID_HANDLE
    if not (math.isfinite(x) and math.isfinite(y)):
        return NO_HIT
    found = session.stage.hit_test(Point(float(x), float(y)))
    return NO_HIT if found is None else found


def document(handle: int) -> Optional[str]:
    """Canonical ShapeDocument JSON text, or None on an invalid handle."""
    session = _sessions.get(handle)
    if session is None:
        _fail(handle, f"invalid handle: {handle}")
        return None
    return document_to_json(to_document(session.stage))


def version(handle: int) -> int:
    """Stage change counter; the UI's change-detection signal."""
    session = _sessions.get(handle)
    if session is None:
        _fail(handle, f"invalid handle: {handle}")
        return ERR_INVALID_HANDLE
    return session.stage.version


def load_document(handle: int, json_text: str) -> int:
    """Replace the session's stage with a deserialized document (import)."""
    session = _sessions.get(handle)
    if session is None:
        _fail(handle, f"invalid handle: {handle}")
        return ERR_INVALID_HANDLE
    try:
        stage = from_document(document_from_json(json_text))
    except ValueError as exc:
        _fail(handle, str(exc))
        return ERR_MALFORMED_DOCUMENT
    # Keep the change counter monotone across the swap so pollers notice.
    stage.version = session.stage.version + 1
    if session.drag_token is not None:
        _drags.pop(session.drag_token, None)
        session.drag_token = None
    session.builder = None
    session.stage = stage
    return OK
