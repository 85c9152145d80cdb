/** ShapeDocument: the canonical JSON wire format shared with the core. */
export function allShapes(doc) {
    return doc.layers.flatMap((layer) => layer.shapes);
}
export function emptyDocument(width, height) {
    return { bounds: { width, height }, layers: [] };
}
//# sourceMappingURL=types.js.map