// Pure view-model builders. The DOM layer in app.ts only applies these;
// keeping them pure lets the duality invariants be unit-tested headless.

import { partitionOf, samePartition } from "./partition.js";
import type { SessionPayload, SgInfo } from "./types.js";

export interface SquareView {
  index: number;
  coin: boolean;
  selected: boolean;
  hint: boolean;
  stagedTarget: boolean;
}

/** The numbered strip: coins, current selection, hint highlights. */
export function stripView(
  position: number[],
  boardSize: number,
  selection: Set<number>,
  hintSquares: Set<number>,
  stagedTargets: Set<number>,
): SquareView[] {
  const coins = new Set(position);
  const squares: SquareView[] = [];
  for (let i = 0; i < boardSize; i++) {
    squares.push({
      index: i,
      coin: coins.has(i),
      selected: selection.has(i),
      hint: hintSquares.has(i),
      stagedTarget: stagedTargets.has(i),
    });
  }
  return squares;
}

/** Row widths of the Young diagram for the given position. */
export function diagramRows(position: number[]): number[] {
  return partitionOf(position);
}

/**
 * The board/diagram duality check: the rows rendered from the position
 * must match the partition the server reported for the same ply.
 */
export function diagramMatchesServer(position: number[], serverPartition: number[]): boolean {
  return samePartition(diagramRows(position), serverPartition);
}

/** Badge text like "6 = (0,1,1)_2"; terminal value renders as plain 0. */
export function sgBadge(sg: SgInfo): string {
  if (sg.value === 0) return `0 (P-position)${sg.method === "oracle" ? " *oracle*" : ""}`;
  const digits = `(${sg.digits.join(",")})_${sg.base}`;
  const suffix = sg.method === "oracle" ? " *oracle*" : "";
  return `${sg.value} = ${digits}${suffix}`;
}

/** The hint slider runs over reachable values: 0 .. sg-1 (empty at 0). */
export function hintSliderMax(sgValue: number): number {
  return Math.max(0, sgValue - 1);
}

/** Squares to highlight for a set of hint options (their target squares). */
export function hintTargets(options: { pairs: number[][] }[]): Set<number> {
  const targets = new Set<number>();
  for (const option of options) {
    for (const pair of option.pairs) {
      const to = pair[1];
      if (to !== undefined) targets.add(to);
    }
  }
  return targets;
}

export interface StatusLine {
  text: string;
  tone: "info" | "win" | "loss" | "warn";
}

export function statusLine(state: SessionPayload): StatusLine {
  if (state.over) {
    if (state.winner === "human") return { text: "You win!", tone: "win" };
    return { text: "Engine wins.", tone: "loss" };
  }
  if (state.turn === "human") {
    return {
      text: state.sg.value === 0 ? "Your move (no winning move exists)" : "Your move",
      tone: state.sg.value === 0 ? "warn" : "info",
    };
  }
  return { text: "Engine thinking...", tone: "info" };
}

/** Board size: enough squares to show everything with a little headroom. */
export function boardSize(position: number[]): number {
  return Math.max(10, Math.max(...position) + 3);
}
