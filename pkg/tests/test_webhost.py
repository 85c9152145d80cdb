import json
import threading
import urllib.request

import pytest

from shapestage import bridge
from shapestage.webhost import serve


@pytest.fixture()
def server_port():
    bridge.reset()
    server = serve(0)
    port = server.server_address[1]
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield port
    server.shutdown()
    bridge.reset()


def _call(port, name, *args):
    req = urllib.request.Request(
        f"http://127.0.0.1:{port}/api/{name}",
        data=json.dumps({"args": list(args)}).encode(),
        headers={"Content-Type": "application/json"},
        method="POST",
    )
    with urllib.request.urlopen(req) as resp:
        return json.loads(resp.read())["result"]


def test_full_editing_flow_over_http(server_port):
    port = server_port
    handle = _call(port, "session_create", 100, 80)
    assert handle > 0
    assert _call(port, "begin_polygon", handle) == 0
    assert _call(port, "add_vertex", handle, 10, 10) is True
    assert _call(port, "add_vertex", handle, 40, 10) is True
    assert _call(port, "add_vertex", handle, 25, 35) is True
    shape_id = _call(port, "close_polygon", handle)
    assert shape_id > 0
    assert _call(port, "version", handle) == 1

    token = _call(port, "drag_begin", handle, shape_id)
    assert _call(port, "drag_move", token, 1000, 0) == [60, 0]
    assert _call(port, "drag_move", token, 1000, 1000) == [60, 45]
    assert _call(port, "drag_end", token) == 0

    doc = json.loads(_call(port, "document", handle))
    assert doc["layers"][0]["shapes"][0]["id"] == shape_id
    assert _call(port, "hit", handle, 1, 1) == 0
    assert _call(port, "session_destroy", handle) == 0


def test_unknown_operation_is_404(server_port):
    req = urllib.request.Request(
        f"http://127.0.0.1:{server_port}/api/nuke",
        data=b"{}",
        method="POST",
    )
    with pytest.raises(urllib.error.HTTPError) as err:
        urllib.request.urlopen(req)
    assert err.value.code == 404
