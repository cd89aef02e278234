// DOM wiring: config panel, strip interactions, diagram, hints, history.
// All rendering goes through the pure builders in view.ts; all rules
// decisions go through the server, with validator.ts giving live feedback.

import { ApiError, PlayClient } from "./api.js";
import { checkPairs } from "./validator.js";
import {
  boardSize,
  diagramMatchesServer,
  diagramRows,
  hintSliderMax,
  hintTargets,
  sgBadge,
  statusLine,
  stripView,
} from "./view.js";
import type { MovePair, Rules, SessionPayload } from "./types.js";

const client = new PlayClient("");

interface UiState {
  session: SessionPayload | null;
  selection: number[]; // selected coins, in click order
  staged: MovePair[]; // assigned (from, to) pairs
  hints: Set<number>;
  busy: boolean;
}

const ui: UiState = { session: null, selection: [], staged: [], hints: new Set(), busy: false };

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function setBanner(text: string, tone: "info" | "win" | "loss" | "warn" | "error") {
  const banner = el<HTMLDivElement>("banner");
  banner.textContent = text;
  banner.dataset.tone = tone;
}

function currentRules(): Rules | null {
  return ui.session ? ui.session.rules : null;
}

function pendingPairs(): MovePair[] {
  return ui.staged.slice();
}

function legalityIndicator(): string {
  const session = ui.session;
  const rules = currentRules();
  if (!session || !rules) return "";
  if (ui.staged.length === 0) return "select a coin, then a lower empty square";
  const verdict = checkPairs(rules, session.position, pendingPairs());
  if (verdict === null) return "move is legal — submit or keep adding coins";
  const names: Record<string, string> = {
    1: `must move between 1 and ${rules.k - 1} coins`,
    2: "coins only slide down",
    3: "total removed must match the smallest per-coin order",
    distinct: "target square is occupied",
    position: "that is not a coin of the current position",
  };
  return `not legal yet: ${names[String(verdict)]}`;
}

function render() {
  const session = ui.session;
  const config = el<HTMLFieldSetElement>("config");
  config.style.display = session ? "none" : "block";
  const game = el<HTMLDivElement>("game");
  game.style.display = session ? "block" : "none";
  if (!session) return;

  const status = statusLine(session);
  setBanner(status.text, status.tone);
  el<HTMLSpanElement>("sg-badge").textContent = sgBadge(session.sg);
  el<HTMLSpanElement>("rules-badge").textContent =
    `p=${session.rules.p} k=${session.rules.k} (${session.sg.method})`;

  // Strip.
  const strip = el<HTMLDivElement>("strip");
  strip.replaceChildren();
  const staged = new Set(ui.staged.map(([, to]) => to));
  const squares = stripView(
    session.position,
    boardSize(session.position),
    new Set(ui.selection),
    ui.hints,
    staged,
  );
  for (const square of squares) {
    const cell = document.createElement("button");
    cell.className = "square";
    cell.dataset.coin = String(square.coin);
    cell.dataset.selected = String(square.selected);
    cell.dataset.hint = String(square.hint);
    cell.dataset.staged = String(square.stagedTarget);
    cell.textContent = String(square.index);
    cell.addEventListener("click", () => onSquareClick(square.index));
    strip.appendChild(cell);
  }

  // Young diagram, with the duality check against the server payload.
  const rows = diagramRows(session.position);
  if (!diagramMatchesServer(session.position, session.partition)) {
    setBanner("diagram/server mismatch — reload", "error");
  }
  const diagram = el<HTMLDivElement>("diagram");
  diagram.replaceChildren();
  for (const width of rows) {
    const row = document.createElement("div");
    row.className = "diagram-row";
    for (let j = 0; j < width; j++) {
      const cell = document.createElement("span");
      cell.className = "diagram-cell";
      row.appendChild(cell);
    }
    diagram.appendChild(row);
  }
  if (rows.length === 0) diagram.textContent = "(empty diagram)";

  // Hints slider bound.
  const slider = el<HTMLInputElement>("hint-level");
  slider.max = String(hintSliderMax(session.sg.value));

  // Move staging; the UI never submits a move its validator rejects
  // (the server stays authoritative for everything it accepts).
  el<HTMLSpanElement>("legality").textContent = legalityIndicator();
  const stagedVerdict =
    ui.staged.length > 0 ? checkPairs(session.rules, session.position, pendingPairs()) : "position";
  el<HTMLButtonElement>("submit-move").disabled =
    ui.busy || session.turn !== "human" || stagedVerdict !== null;

  // History.
  const history = el<HTMLOListElement>("history");
  history.replaceChildren();
  for (const entry of session.history) {
    const item = document.createElement("li");
    item.textContent = `${entry.by}: {${entry.position.join(", ")}}`;
    history.appendChild(item);
  }
}

function onSquareClick(index: number) {
  const session = ui.session;
  if (!session || session.turn !== "human" || ui.busy) return;
  const coins = new Set(session.position);
  if (coins.has(index)) {
    // Toggle coin selection (drop any staged target for it).
    if (ui.selection.includes(index)) {
      ui.selection = ui.selection.filter((c) => c !== index);
      ui.staged = ui.staged.filter(([from]) => from !== index);
    } else {
      ui.selection.push(index);
    }
  } else {
    // Assign this square to the first selected coin without a target.
    const assigned = new Set(ui.staged.map(([from]) => from));
    const next = ui.selection.find((c) => !assigned.has(c));
    if (next !== undefined) {
      ui.staged.push([next, index]);
      const rules = currentRules();
      const legalNow =
        rules !== null && checkPairs(rules, session.position, pendingPairs()) === null;
      if (ui.selection.length === 1 && ui.staged.length === 1 && legalNow) {
        void submitMove(); // single-coin fast path
        return;
      }
    }
  }
  render();
}

async function submitMove() {
  const session = ui.session;
  if (!session || ui.staged.length === 0) return;
  ui.busy = true;
  render();
  try {
    const response = await client.move(session.id, pendingPairs());
    ui.session = response.state;
    ui.selection = [];
    ui.staged = [];
    ui.hints = new Set();
    if (response.engine_move?.losing_spot) {
      setBanner("Engine is in a losing spot — it only wins if you err.", "warn");
    }
  } catch (error) {
    if (error instanceof ApiError && error.rejection) {
      setBanner(`Illegal move (condition ${error.rejection.condition}): ${error.rejection.message}`, "error");
      ui.staged = [];
      ui.selection = [];
    } else {
      setBanner("Network problem — state re-fetched, try again.", "error");
      try {
        ui.session = await client.state(session.id);
      } catch {
        /* keep the stale state; the banner already warns */
      }
    }
  } finally {
    ui.busy = false;
    render();
  }
}

async function showHints() {
  const session = ui.session;
  if (!session) return;
  const h = Number(el<HTMLInputElement>("hint-level").value);
  try {
    const hints = await client.hints(session.id, h);
    ui.hints = hintTargets(hints.options);
    setBanner(
      hints.options.length
        ? `${hints.options.length} option(s) with value ${h} highlighted`
        : `no options with value ${h}`,
      "info",
    );
  } catch {
    setBanner("Could not fetch hints.", "error");
  }
  render();
}

async function newGame(event: Event) {
  event.preventDefault();
  const p = Number(el<HTMLInputElement>("cfg-p").value);
  const kRaw = el<HTMLInputElement>("cfg-k").value.trim();
  const coins = el<HTMLInputElement>("cfg-coins")
    .value.split(",")
    .map((part) => Number(part.trim()))
    .filter((v) => !Number.isNaN(v));
  const engineFirst = el<HTMLInputElement>("cfg-engine-first").checked;
  const m = coins.length;
  const k = kRaw === "" ? m + 1 : Number(kRaw);
  const problems: string[] = [];
  if (!(p >= 2)) problems.push("p must be at least 2");
  if (!(k >= 2)) problems.push("k=1 allows no moves");
  if (k > m + 1) problems.push(`k at most m+1 = ${m + 1}`);
  if (new Set(coins).size !== m || m === 0) problems.push("coins must be distinct and non-empty");
  const errors = el<HTMLSpanElement>("cfg-errors");
  errors.textContent = problems.join("; ");
  if (problems.length) return;
  if (k < m + 1) {
    errors.textContent = "note: k below m+1 — value badges switch to oracle values (may be capped)";
  }
  try {
    const created = await client.createSession({ p, k, coins, engine_first: engineFirst });
    ui.session = created.session;
    ui.selection = [];
    ui.staged = [];
    ui.hints = new Set();
    render();
  } catch (error) {
    errors.textContent = error instanceof ApiError ? error.message : "could not reach the server";
  }
}

export function start() {
  el<HTMLFormElement>("config-form").addEventListener("submit", (e) => void newGame(e));
  el<HTMLButtonElement>("submit-move").addEventListener("click", () => void submitMove());
  el<HTMLButtonElement>("show-hints").addEventListener("click", () => void showHints());
  el<HTMLButtonElement>("new-game").addEventListener("click", () => {
    ui.session = null;
    render();
  });
  render();
}

if (typeof document !== "undefined" && document.getElementById("config-form")) {
  start();
}
