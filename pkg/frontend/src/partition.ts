// Position/partition dictionary, duplicated client-side for rendering.
// The server payload stays authoritative; renderers compare against it so
// the strip and the diagram can never drift apart silently.

export function lambdaSize(coins: number[]): number {
  const m = coins.length;
  const total = coins.reduce((acc, c) => acc + c, 0);
  return total - (m * (m - 1)) / 2;
}

/** Partition of a coin set: sort descending, subtract the staircase,
 * drop zero parts. */
export function partitionOf(coins: number[]): number[] {
  const m = coins.length;
  const desc = [...coins].sort((a, b) => b - a);
  const parts = desc.map((c, i) => c - m + (i + 1));
  return parts.filter((v) => v > 0);
}

export function isTerminal(coins: number[]): boolean {
  return lambdaSize(coins) === 0;
}

export function samePartition(a: number[], b: number[]): boolean {
  return a.length === b.length && a.every((v, i) => v === b[i]);
}
