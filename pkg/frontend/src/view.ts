/**
 * Canvas painter. The browser canvas does the pretty on-screen rendering;
 * the core's rasterizer is for tests and CLI output only.
 */

import { EditorController } from "./editor.js";
import { ShapeEntry } from "./types.js";

interface PaintStyle {
  fill: string;
  stroke: string;
  lineWidth: number;
}

/** Named style classes; the selected shape switches to "selected". */
const STYLES: Record<string, PaintStyle> = {
  default: { fill: "rgba(200,60,60,0.55)", stroke: "#922", lineWidth: 1.5 },
  accent: { fill: "rgba(40,120,220,0.55)", stroke: "#247", lineWidth: 1.5 },
  selected: { fill: "rgba(255,200,40,0.65)", stroke: "#a70", lineWidth: 2.5 },
};

export function styleFor(shape: ShapeEntry, selectedId: number | null): PaintStyle {
  if (shape.id === selectedId) {
    return STYLES.selected;
  }
  return STYLES[shape.style] ?? STYLES.default;
}

function tracePath(ctx: CanvasRenderingContext2D, vertices: [number, number][]): void {
  ctx.beginPath();
  vertices.forEach(([x, y], i) => (i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y)));
  ctx.closePath();
}

export function paint(
  ctx: CanvasRenderingContext2D,
  editor: EditorController,
  media: HTMLImageElement | HTMLVideoElement | null,
): void {
  const { width, height } = editor.bounds;
  ctx.clearRect(0, 0, width, height);
  if (media !== null) {
    ctx.drawImage(media, 0, 0, width, height);
  } else {
    ctx.fillStyle = "#f4f4f0";
    ctx.fillRect(0, 0, width, height);
  }

  for (const layer of editor.doc.layers) {
    for (const shape of layer.shapes) {
      const style = styleFor(shape, editor.selectedId);
      tracePath(ctx, shape.vertices);
      ctx.fillStyle = style.fill;
      ctx.fill("evenodd");
      ctx.strokeStyle = style.stroke;
      ctx.lineWidth = style.lineWidth;
      ctx.stroke();
    }
  }

  // rubber-band preview of the in-progress polygon
  if (editor.preview.length > 0) {
    ctx.beginPath();
    editor.preview.forEach(([x, y], i) => (i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y)));
    ctx.strokeStyle = "#333";
    ctx.setLineDash([4, 3]);
    ctx.lineWidth = 1;
    ctx.stroke();
    ctx.setLineDash([]);
    for (const [x, y] of editor.preview) {
      ctx.fillStyle = "#333";
      ctx.fillRect(x - 2, y - 2, 4, 4);
    }
  }
}
