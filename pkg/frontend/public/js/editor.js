/**
 * DOM-free editor controller: owns the tool/selection state, feeds pointer
 * gestures through the bridge, and keeps a synced copy of the canonical
 * document for the canvas and the live JSON panel.
 *
 * Change detection is polling: the host calls tick() once per animation
 * frame; when the core's version counter moved, the document is refetched.
 * During drawing and dragging the controller syncs eagerly so visuals
 * never lag the core by more than one frame.
 */
import { NO_HIT } from "./bridge.js";
import { allShapes, emptyDocument } from "./types.js";
export class EditorController {
    constructor(bridge, handle, width, height) {
        this.bridge = bridge;
        this.handle = handle;
        this.tool = "draw";
        this.selectedId = null;
        /** Vertices of the in-progress polygon (rubber-band preview). */
        this.preview = [];
        /** Inline feedback: rejected vertices, degenerate close, import errors. */
        this.message = "";
        this.backgroundRef = null;
        this.lastSyncedVersion = -1;
        this.polygonOpen = false;
        this.dragToken = 0;
        this.dragStart = null;
        this.doc = emptyDocument(width, height);
        this.panelText = JSON.stringify(this.doc);
    }
    static async create(bridge, width, height) {
        const handle = await bridge.sessionCreate(width, height);
        if (handle <= 0) {
            throw new Error("could not create editing session");
        }
        const editor = new EditorController(bridge, handle, width, height);
        await editor.sync();
        return editor;
    }
    get bounds() {
        return this.doc.bounds;
    }
    // -- document sync -------------------------------------------------------
    /** Per-frame poll: refetch the document only when the version moved. */
    async tick() {
        const version = await this.bridge.version(this.handle);
        if (version !== this.lastSyncedVersion) {
            await this.sync(version);
        }
    }
    async sync(knownVersion) {
        const version = knownVersion ?? (await this.bridge.version(this.handle));
        const text = await this.bridge.document(this.handle);
        if (text === null) {
            return;
        }
        this.doc = JSON.parse(text);
        this.panelText = text;
        this.lastSyncedVersion = version;
        if (this.selectedId !== null && !allShapes(this.doc).some((s) => s.id === this.selectedId)) {
            this.selectedId = null;
        }
    }
    // -- tools ----------------------------------------------------------------
    async setTool(tool) {
        if (tool === this.tool) {
            return;
        }
        if (this.tool === "draw") {
            await this.cancelPolygon();
        }
        if (this.tool === "select" && this.dragToken > 0) {
            await this.pointerUp();
        }
        this.tool = tool;
        this.selectedId = null;
        this.message = "";
    }
    // -- draw interaction ------------------------------------------------------
    /** Draw-tool click: try to append a vertex; rejected ones only flash. */
    async clickVertex(x, y) {
        if (this.tool !== "draw") {
            return false;
        }
        if (!this.polygonOpen) {
            await this.bridge.beginPolygon(this.handle);
            this.polygonOpen = true;
            this.preview = [];
        }
        const accepted = await this.bridge.addVertex(this.handle, x, y);
        if (accepted) {
            this.preview.push([x, y]);
            this.message = "";
        }
        else {
            this.message = `vertex rejected: ${await this.bridge.lastError(this.handle)}`;
        }
        return accepted;
    }
    /** Enter / double-click: close the polygon. Stays open when degenerate. */
    async finishPolygon() {
        if (!this.polygonOpen) {
            return 0;
        }
        const shapeId = await this.bridge.closePolygon(this.handle);
        if (shapeId <= 0) {
            this.message = await this.bridge.lastError(this.handle);
            return 0;
        }
        this.polygonOpen = false;
        this.preview = [];
        this.message = "";
        await this.sync();
        return shapeId;
    }
    /** Escape: discard the in-progress polygon. */
    async cancelPolygon() {
        if (this.polygonOpen) {
            await this.bridge.beginPolygon(this.handle); // re-begin discards
            this.polygonOpen = false;
        }
        this.preview = [];
    }
    // -- drag interaction --------------------------------------------------------
    async pointerDown(x, y) {
        if (this.tool !== "select") {
            return;
        }
        const hitId = await this.bridge.hit(this.handle, x, y);
        this.selectedId = hitId > NO_HIT ? hitId : null;
        if (this.selectedId !== null) {
            const token = await this.bridge.dragBegin(this.handle, this.selectedId);
            if (token > 0) {
                this.dragToken = token;
                this.dragStart = { x, y };
            }
        }
    }
    /** Every pointer move is clamped by the core; the shape is repositioned
     * at whatever translation the core actually applied. */
    async pointerMove(x, y) {
        if (this.dragToken <= 0 || this.dragStart === null) {
            return null;
        }
        const applied = await this.bridge.dragMove(this.dragToken, x - this.dragStart.x, y - this.dragStart.y);
        if (applied !== null) {
            await this.sync();
        }
        return applied;
    }
    async pointerUp() {
        if (this.dragToken > 0) {
            await this.bridge.dragEnd(this.dragToken);
            this.dragToken = 0;
            this.dragStart = null;
        }
    }
    // -- selection edits --------------------------------------------------------
    async deleteSelected() {
        if (this.selectedId === null) {
            return;
        }
        const pruned = {
            bounds: this.doc.bounds,
            layers: this.doc.layers.map((layer) => ({
                id: layer.id,
                shapes: layer.shapes.filter((s) => s.id !== this.selectedId),
            })),
        };
        const code = await this.bridge.loadDocument(this.handle, JSON.stringify(pruned));
        if (code === 0) {
            this.selectedId = null;
            await this.sync();
        }
        else {
            this.message = await this.bridge.lastError(this.handle);
        }
    }
    // -- documents ----------------------------------------------------------------
    exportJson() {
        return this.panelText;
    }
    async importJson(text) {
        const code = await this.bridge.loadDocument(this.handle, text);
        if (code !== 0) {
            this.message = `import failed: ${await this.bridge.lastError(this.handle)}`;
            return false;
        }
        this.selectedId = null;
        this.preview = [];
        this.polygonOpen = false;
        this.message = "";
        await this.sync();
        return true;
    }
    /** Adopt new media dimensions. Existing shapes that would fall outside
     * the new bounds make the core reject the swap; the caller is told to
     * clear first. */
    async setMedia(width, height, ref) {
        const resized = {
            bounds: { width, height },
            layers: this.doc.layers,
        };
        const code = await this.bridge.loadDocument(this.handle, JSON.stringify(resized));
        if (code !== 0) {
            this.message =
                "media size rejected: existing shapes fall outside the new bounds; clear them first";
            return false;
        }
        this.backgroundRef = ref;
        await this.sync();
        return true;
    }
}
//# sourceMappingURL=editor.js.map