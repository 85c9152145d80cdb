/**
 * Single-page editor wiring: canvas gestures, tool buttons, the live JSON
 * panel, background media, and JSON import/export. No navigation ever
 * happens; everything updates in place.
 */

import { HttpBridge } from "./bridge.js";
import { EditorController } from "./editor.js";
import { paint } from "./view.js";

const DEFAULT_WIDTH = 640;
const DEFAULT_HEIGHT = 480;

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (el === null) {
    throw new Error(`missing element #${id}`);
  }
  return el as T;
}

async function boot(): Promise<void> {
  const bridge = new HttpBridge("");
  const editor = await EditorController.create(bridge, DEFAULT_WIDTH, DEFAULT_HEIGHT);

  const canvas = byId<HTMLCanvasElement>("stage");
  const panel = byId<HTMLPreElement>("doc-panel");
  const messageBox = byId<HTMLElement>("message");
  const drawBtn = byId<HTMLButtonElement>("tool-draw");
  const selectBtn = byId<HTMLButtonElement>("tool-select");
  const ctx = canvas.getContext("2d")!;
  let media: HTMLImageElement | HTMLVideoElement | null = null;

  function fitCanvas(): void {
    canvas.width = editor.bounds.width;
    canvas.height = editor.bounds.height;
  }
  fitCanvas();

  function toStage(ev: MouseEvent): [number, number] {
    const rect = canvas.getBoundingClientRect();
    return [ev.clientX - rect.left, ev.clientY - rect.top];
  }

  function reflectTool(): void {
    drawBtn.classList.toggle("active", editor.tool === "draw");
    selectBtn.classList.toggle("active", editor.tool === "select");
  }

  drawBtn.addEventListener("click", async () => {
    await editor.setTool("draw");
    reflectTool();
  });
  selectBtn.addEventListener("click", async () => {
    await editor.setTool("select");
    reflectTool();
  });
  reflectTool();

  canvas.addEventListener("pointerdown", async (ev) => {
    const [x, y] = toStage(ev);
    if (editor.tool === "draw") {
      await editor.clickVertex(x, y);
    } else {
      canvas.setPointerCapture(ev.pointerId);
      await editor.pointerDown(x, y);
    }
  });
  canvas.addEventListener("pointermove", async (ev) => {
    if (editor.tool === "select") {
      const [x, y] = toStage(ev);
      await editor.pointerMove(x, y);
    }
  });
  canvas.addEventListener("pointerup", async () => {
    await editor.pointerUp();
  });
  canvas.addEventListener("dblclick", async () => {
    await editor.finishPolygon();
  });
  window.addEventListener("keydown", async (ev) => {
    if (ev.key === "Enter") {
      await editor.finishPolygon();
    } else if (ev.key === "Escape") {
      await editor.cancelPolygon();
    } else if (ev.key === "Delete" || ev.key === "Backspace") {
      await editor.deleteSelected();
    }
  });

  byId<HTMLButtonElement>("delete-shape").addEventListener("click", () => editor.deleteSelected());

  byId<HTMLButtonElement>("export-json").addEventListener("click", () => {
    const blob = new Blob([editor.exportJson()], { type: "application/json" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = "shapes.json";
    link.click();
    URL.revokeObjectURL(link.href);
  });

  byId<HTMLInputElement>("import-json").addEventListener("change", async (ev) => {
    const file = (ev.target as HTMLInputElement).files?.[0];
    if (file) {
      await editor.importJson(await file.text());
      fitCanvas();
    }
  });

  byId<HTMLInputElement>("media-file").addEventListener("change", async (ev) => {
    const file = (ev.target as HTMLInputElement).files?.[0];
    if (!file) {
      return;
    }
    const url = URL.createObjectURL(file);
    if (file.type.startsWith("video/")) {
      const video = document.createElement("video");
      video.muted = true;
      video.loop = true;
      video.src = url;
      video.addEventListener("loadedmetadata", async () => {
        if (await editor.setMedia(video.videoWidth, video.videoHeight, url)) {
          media = video;
          await video.play();
          fitCanvas();
        }
      });
      video.addEventListener("error", () => {
        editor.message = "media failed to load; keeping plain background";
      });
    } else {
      const image = new Image();
      image.src = url;
      image.addEventListener("load", async () => {
        if (await editor.setMedia(image.naturalWidth, image.naturalHeight, url)) {
          media = image;
          fitCanvas();
        }
      });
      image.addEventListener("error", () => {
        editor.message = "media failed to load; keeping plain background";
      });
    }
  });

  // Polling loop: one version check per frame keeps the canvas and the
  // JSON panel within a single frame of the core.
  async function frame(): Promise<void> {
    await editor.tick();
    paint(ctx, editor, media);
    if (panel.textContent !== editor.panelText) {
      panel.textContent = editor.panelText;
    }
    messageBox.textContent = editor.message;
    requestAnimationFrame(() => void frame());
  }
  requestAnimationFrame(() => void frame());
}

void boot();
