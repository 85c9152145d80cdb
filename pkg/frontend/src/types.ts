/** ShapeDocument: the canonical JSON wire format shared with the core. */

export interface ShapeEntry {
  id: number;
  kind: "rectangle" | "polygon";
  /** Effective coordinates: translation already applied. */
  vertices: [number, number][];
  style: string;
}

export interface LayerEntry {
  id: number;
  shapes: ShapeEntry[];
}

export interface ShapeDocument {
  bounds: { width: number; height: number };
  layers: LayerEntry[];
}

export function allShapes(doc: ShapeDocument): ShapeEntry[] {
  return doc.layers.flatMap((layer) => layer.shapes);
}

export function emptyDocument(width: number, height: number): ShapeDocument {
  return { bounds: { width, height }, layers: [] };
}
