/**
 * Client for the engine's flat boundary. Every call maps 1:1 onto a core
 * bridge function exposed at POST /api/<name>; only scalars and JSON
 * strings cross.
 */
export const NO_HIT = 0;
export class HttpBridge {
    constructor(baseUrl) {
        this.baseUrl = baseUrl;
    }
    async call(name, args) {
        const resp = await fetch(`${this.baseUrl}/api/${name}`, {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify({ args }),
        });
        if (!resp.ok) {
            throw new Error(`bridge call ${name} failed: HTTP ${resp.status}`);
        }
        const payload = (await resp.json());
        return payload.result;
    }
    sessionCreate(width, height) {
        return this.call("session_create", [width, height]);
    }
    sessionDestroy(handle) {
        return this.call("session_destroy", [handle]);
    }
    beginPolygon(handle) {
        return this.call("begin_polygon", [handle]);
    }
    addVertex(handle, x, y) {
        return this.call("add_vertex", [handle, x, y]);
    }
    closePolygon(handle) {
        return this.call("close_polygon", [handle]);
    }
    dragBegin(handle, shapeId) {
        return this.call("drag_begin", [handle, shapeId]);
    }
    dragMove(token, dx, dy) {
        return this.call("drag_move", [token, dx, dy]);
    }
    dragEnd(token) {
        return this.call("drag_end", [token]);
    }
    hit(handle, x, y) {
        return this.call("hit", [handle, x, y]);
    }
    document(handle) {
        return this.call("document", [handle]);
    }
    version(handle) {
        return this.call("version", [handle]);
    }
    loadDocument(handle, json) {
        return this.call("load_document", [handle, json]);
    }
    lastError(handle) {
        return this.call("last_error", [handle]);
    }
}
//# sourceMappingURL=bridge.js.map