"""Minimal HTTP host for the bridge, plus static file serving for the
browser editor.

Plumbing only: every bridge function is exposed 1:1 as
``POST /api/<name>`` with body ``{"args": [...]}`` and response
``{"result": ...}``. Calls are serialized with one lock (the boundary is
single-threaded per session).

    python3 -m shapestage.webhost --port 8787 --static frontend/public
"""

from __future__ import annotations

import argparse
import json
import threading
from functools import partial
from http.server import SimpleHTTPRequestHandler, ThreadingHTTPServer
from typing import Optional, Sequence

from shapestage import bridge

_EXPOSED = {
    name: getattr(bridge, name)
    for name in (
        "session_create",
        "session_destroy",
        "begin_polygon",
        "add_vertex",
        "close_polygon",
        "drag_begin",
        "drag_move",
        "drag_end",
        "hit",
        "document",
        "version",
        "load_document",
        "last_error",
    )
}

_lock = threading.Lock()


class BridgeHandler(SimpleHTTPRequestHandler):
    def log_message(self, fmt, *args):  # keep test output quiet
        pass

    def _reply(self, status: int, payload: dict) -> None:
        body = json.dumps(payload).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def do_POST(self) -> None:
        if not self.path.startswith("/api/"):
            self._reply(404, {"error": "not found"})
            return
        name = self.path[len("/api/") :]
        fn = _EXPOSED.get(name)
        if fn is None:
            self._reply(404, {"error": f"unknown operation: {name}"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            payload = json.loads(self.rfile.read(length) or b"{}")
            args = payload.get("args", [])
            if not isinstance(args, list):
                raise ValueError("args must be an array")
        except (ValueError, json.JSONDecodeError) as exc:
            self._reply(400, {"error": str(exc)})
            return
        try:
            with _lock:
                result = fn(*args)
        except TypeError as exc:
            self._reply(400, {"error": str(exc)})
            return
        if isinstance(result, tuple):
            result = list(result)
        self._reply(200, {"result": result})


def serve(port: int, static_dir: Optional[str] = None) -> ThreadingHTTPServer:
    handler = partial(BridgeHandler, directory=static_dir) if static_dir else BridgeHandler
    server = ThreadingHTTPServer(("127.0.0.1", port), handler)
    return server


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(prog="shapestage-webhost")
    parser.add_argument("--port", type=int, default=8787)
    parser.add_argument("--static", default=None, help="directory of editor assets to serve")
    args = parser.parse_args(argv)
    server = serve(args.port, args.static)
    print(f"listening on http://127.0.0.1:{args.port}/", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
