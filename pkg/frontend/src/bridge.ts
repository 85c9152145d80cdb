/**
 * Client for the engine's flat boundary. Every call maps 1:1 onto a core
 * bridge function exposed at POST /api/<name>; only scalars and JSON
 * strings cross.
 */

export interface BridgeClient {
  sessionCreate(width: number, height: number): Promise<number>;
  sessionDestroy(handle: number): Promise<number>;
  beginPolygon(handle: number): Promise<number>;
  addVertex(handle: number, x: number, y: number): Promise<boolean>;
  closePolygon(handle: number): Promise<number>;
  dragBegin(handle: number, shapeId: number): Promise<number>;
  dragMove(token: number, dx: number, dy: number): Promise<[number, number] | null>;
  dragEnd(token: number): Promise<number>;
  hit(handle: number, x: number, y: number): Promise<number>;
  document(handle: number): Promise<string | null>;
  version(handle: number): Promise<number>;
  loadDocument(handle: number, json: string): Promise<number>;
  lastError(handle: number): Promise<string>;
}

export const NO_HIT = 0;

export class HttpBridge implements BridgeClient {
  constructor(private readonly baseUrl: string) {}

  private async call<T>(name: string, args: unknown[]): Promise<T> {
    const resp = await fetch(`${this.baseUrl}/api/${name}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ args }),
    });
    if (!resp.ok) {
      throw new Error(`bridge call ${name} failed: HTTP ${resp.status}`);
    }
    const payload = (await resp.json()) as { result: T };
    return payload.result;
  }

  sessionCreate(width: number, height: number) {
    return this.call<number>("session_create", [width, height]);
  }
  sessionDestroy(handle: number) {
    return this.call<number>("session_destroy", [handle]);
  }
  beginPolygon(handle: number) {
    return this.call<number>("begin_polygon", [handle]);
  }
  addVertex(handle: number, x: number, y: number) {
    return this.call<boolean>("add_vertex", [handle, x, y]);
  }
  closePolygon(handle: number) {
    return this.call<number>("close_polygon", [handle]);
  }
  dragBegin(handle: number, shapeId: number) {
    return this.call<number>("drag_begin", [handle, shapeId]);
  }
  dragMove(token: number, dx: number, dy: number) {
    return this.call<[number, number] | null>("drag_move", [token, dx, dy]);
  }
  dragEnd(token: number) {
    return this.call<number>("drag_end", [token]);
  }
  hit(handle: number, x: number, y: number) {
    return this.call<number>("hit", [handle, x, y]);
  }
  document(handle: number) {
    return this.call<string | null>("document", [handle]);
  }
  version(handle: number) {
    return this.call<number>("version", [handle]);
  }
  loadDocument(handle: number, json: string) {
    return this.call<number>("load_document", [handle, json]);
  }
  lastError(handle: number) {
    return this.call<string>("last_error", [handle]);
  }
}
