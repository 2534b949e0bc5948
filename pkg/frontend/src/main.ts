/**
 * Wiring: session lifecycle, click-to-mutate with a serialized request
 * queue, undo, history strip, and non-blocking error banners.
 */

import { ApiClient, ApiError, SessionState } from "./api.js";
import { buildGraph, GraphModel } from "./graph.js";
import { initialLayout, kineticEnergy, LayoutNode, stepLayout } from "./layout.js";
import { SerialQueue } from "./queue.js";
import { drawGraph, hitTest } from "./render.js";

interface AppState {
  client: ApiClient;
  session: string | null;
  model: GraphModel | null;
  layout: LayoutNode[];
  /** Arrow counts of every state seen, oldest first; last is current. */
  trail: number[];
}

const app: AppState = {
  client: new ApiClient(localStorage.getItem("qmBaseUrl") ?? "http://127.0.0.1:8763"),
  session: null,
  model: null,
  layout: [],
  trail: [],
};

const queue = new SerialQueue();

// -- DOM handles --------------------------------------------------------

const $ = <T extends HTMLElement>(id: string): T =>
  document.getElementById(id) as T;

const canvas = $<HTMLCanvasElement>("view");
const ctx = canvas.getContext("2d")!;
const banners = $<HTMLDivElement>("banners");
const arrowCountEl = $<HTMLSpanElement>("arrow-count");
const sessionEl = $<HTMLSpanElement>("session-id");
const historyStrip = $<HTMLDivElement>("history");
const undoButton = $<HTMLButtonElement>("undo");
const baseUrlInput = $<HTMLInputElement>("base-url");
const generatorSelect = $<HTMLSelectElement>("generator");
const loadButton = $<HTMLButtonElement>("load");
const pasteArea = $<HTMLTextAreaElement>("paste");

// -- Error banners ------------------------------------------------------

function banner(message: string): void {
  const el = document.createElement("div");
  el.className = "banner";
  el.textContent = message;
  const close = document.createElement("button");
  close.textContent = "x";
  close.onclick = () => el.remove();
  el.appendChild(close);
  banners.appendChild(el);
  setTimeout(() => el.remove(), 8000);
}

// -- State application --------------------------------------------------

function applyState(state: SessionState, resetTrail: boolean): void {
  const previous = app.model?.nodes.length ?? -1;
  app.session = state.session;
  app.model = buildGraph(state);
  if (resetTrail) {
    app.trail = [state.arrow_count];
  } else {
    app.trail.push(state.arrow_count);
  }
  if (app.model.nodes.length !== previous) {
    app.layout = initialLayout(
      app.model.nodes.length,
      canvas.width,
      canvas.height,
    );
  }
  arrowCountEl.textContent = String(state.arrow_count);
  sessionEl.textContent = state.session;
  undoButton.disabled = state.history === 0;
  renderHistory(state.history);
  wake();
}

function applyUndo(state: SessionState): void {
  app.model = buildGraph(state);
  app.trail.pop();
  arrowCountEl.textContent = String(state.arrow_count);
  undoButton.disabled = state.history === 0;
  renderHistory(state.history);
  wake();
}

function renderHistory(undoDepth: number): void {
  historyStrip.textContent = "";
  const start = Math.max(0, app.trail.length - 24);
  app.trail.slice(start).forEach((count, i) => {
    const cell = document.createElement("span");
    cell.className =
      "cell" + (start + i === app.trail.length - 1 ? " current" : "");
    cell.textContent = String(count);
    historyStrip.appendChild(cell);
  });
  historyStrip.title = `${undoDepth} undoable steps`;
}

// -- Layout loop --------------------------------------------------------

let animating = false;

function wake(): void {
  if (!animating) {
    animating = true;
    requestAnimationFrame(tick);
  }
}

function tick(): void {
  if (!app.model) {
    animating = false;
    return;
  }
  stepLayout(app.layout, app.model.edges, canvas.width, canvas.height);
  drawGraph(ctx, app.model, app.layout, canvas.width, canvas.height);
  if (kineticEnergy(app.layout) > 0.05) {
    requestAnimationFrame(tick);
  } else {
    animating = false;
  }
}

// -- Actions ------------------------------------------------------------

async function loadSession(): Promise<void> {
  const pasted = pasteArea.value.trim();
  const spec: Record<string, unknown> = pasted
    ? { quiver: pasted }
    : generatorSpec(generatorSelect.value);
  try {
    const state = await app.client.createSession(spec);
    applyState(state, true);
  } catch (err) {
    banner(err instanceof ApiError ? err.message : String(err));
  }
}

function generatorSpec(choice: string): Record<string, unknown> {
  const [name, ...params] = choice.split(" ");
  const spec: Record<string, unknown> = { generator: name };
  for (const p of params) {
    const [key, value] = p.split("=");
    spec[key] = Number(value);
  }
  return spec;
}

function clickVertex(vertex: number): void {
  queue
    .enqueue(async () => {
      if (!app.session) return;
      const state = await app.client.mutate(app.session, vertex);
      applyState(state, false);
    })
    .catch((err) => {
      banner(err instanceof ApiError ? err.message : String(err));
    });
}

// -- Event wiring -------------------------------------------------------

canvas.addEventListener("click", (event) => {
  const rect = canvas.getBoundingClientRect();
  const x = ((event.clientX - rect.left) * canvas.width) / rect.width;
  const y = ((event.clientY - rect.top) * canvas.height) / rect.height;
  const vertex = hitTest(app.layout, x, y);
  if (vertex !== null) clickVertex(vertex);
});

undoButton.addEventListener("click", () => {
  queue
    .enqueue(async () => {
      if (!app.session) return;
      applyUndo(await app.client.undo(app.session));
    })
    .catch((err) => {
      banner(err instanceof ApiError ? err.message : String(err));
    });
});

loadButton.addEventListener("click", () => void loadSession());

baseUrlInput.value = app.client.baseUrl;
baseUrlInput.addEventListener("change", () => {
  app.client.baseUrl = baseUrlInput.value.trim();
  localStorage.setItem("qmBaseUrl", app.client.baseUrl);
});

// -- Boot ---------------------------------------------------------------

async function boot(): Promise<void> {
  try {
    const generators = await app.client.listGenerators();
    generatorSelect.textContent = "";
    for (const g of generators) {
      const option = document.createElement("option");
      option.value =
        g.name + (g.params.length ? " " + g.params.map(defaultParam).join(" ") : "");
      option.textContent = option.value;
      generatorSelect.appendChild(option);
    }
    generatorSelect.value = "qg0 g=1";
  } catch {
    banner("could not list generators; check the base URL");
  }
}

function defaultParam(name: string): string {
  const defaults: Record<string, number> = { g: 1, b: 2, n: 3, m: 6 };
  return `${name}=${defaults[name] ?? 1}`;
}

void boot();
