// Advisory client-side copy of the move-legality rules.
//
// The server remains the authority; this mirror exists so the UI can show
// a live legality indicator before submitting. It is tested against JSON
// vectors emitted by the server-side implementation (`pwelter vectors`),
// which keeps the two from drifting.

import type { MovePair, Rules } from "./types.js";

export type Violation = 1 | 2 | 3 | "distinct" | null;

/** p-adic order of x; null encodes the infinite order of 0. */
export function ordp(x: number, p: number): number | null {
  if (x === 0) return null;
  let v = 0;
  let n = Math.abs(x);
  while (n % p === 0) {
    n /= p;
    v += 1;
  }
  return v;
}

function minOrder(values: number[], p: number): number | null {
  let best: number | null = null;
  for (const v of values) {
    const o = ordp(v, p);
    if (o === null) continue;
    if (best === null || o < best) best = o;
  }
  return best;
}

/**
 * First violated move condition for the coordinate move X -> Y, or null
 * when legal: 1 (moved-coin count not in (0, k)), 2 (a coin went up),
 * "distinct" (occupied target in Welter play), 3 (the total decrease has
 * a different p-adic order than the smallest per-coin decrease).
 */
export function violatedCondition(rules: Rules, from: number[], to: number[]): Violation {
  if (from.length !== rules.m || to.length !== rules.m) {
    throw new Error(`positions must have ${rules.m} coins`);
  }
  const dist = from.filter((x, i) => x !== to[i]).length;
  if (!(0 < dist && dist < rules.k)) return 1;
  if (to.some((y, i) => y > from[i]!)) return 2;
  if (rules.variant === "welter" && new Set(to).size !== rules.m) return "distinct";
  const deltas = from.map((x, i) => x - to[i]!);
  const total = deltas.reduce((a, b) => a + b, 0);
  if (ordp(total, rules.p) !== minOrder(deltas, rules.p)) return 3;
  return null;
}

export function isLegal(rules: Rules, from: number[], to: number[]): boolean {
  return violatedCondition(rules, from, to) === null;
}

/**
 * Expand (from, to) pairs against the current position into aligned
 * coordinate tuples, or report the structural problem ("position") that
 * the server would reject before reaching conditions 1..3.
 */
export function pairsToMove(
  position: number[],
  pairs: MovePair[],
): { from: number[]; to: number[] } | "position" {
  const sorted = [...position].sort((a, b) => a - b);
  const sources = pairs.map(([f]) => f);
  if (new Set(sources).size !== sources.length) return "position";
  if (sources.some((f) => !sorted.includes(f))) return "position";
  if (pairs.some(([, t]) => t < 0 || !Number.isInteger(t))) return "position";
  const mapping = new Map(pairs);
  return { from: sorted, to: sorted.map((x) => mapping.get(x) ?? x) };
}

/** Advisory verdict for a pair-based move against the current position. */
export function checkPairs(
  rules: Rules,
  position: number[],
  pairs: MovePair[],
): Violation | "position" {
  if (pairs.length === 0) return 1;
  const move = pairsToMove(position, pairs);
  if (move === "position") return "position";
  return violatedCondition(rules, move.from, move.to);
}
