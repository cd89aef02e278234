// The advisory client validator must agree with the server's rules on
// every shared vector (regenerate with: pwelter vectors --out
// frontend/test/legality-vectors.json).

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { checkPairs, isLegal, ordp, violatedCondition } from "../src/validator.js";
import type { Rules, Variant } from "../src/types.js";

interface Vector {
  p: number;
  k: number;
  variant: Variant;
  from: number[];
  to: number[];
  legal: boolean;
  condition: 1 | 2 | 3 | "distinct" | null;
}

const here = dirname(fileURLToPath(import.meta.url));
const vectors: { v: number; cases: Vector[] } = JSON.parse(
  readFileSync(join(here, "legality-vectors.json"), "utf-8"),
);

describe("ordp", () => {
  it("matches hand values", () => {
    expect(ordp(12, 2)).toBe(2);
    expect(ordp(12, 3)).toBe(1);
    expect(ordp(5, 3)).toBe(0);
    expect(ordp(0, 7)).toBeNull();
    expect(ordp(-12, 2)).toBe(2);
  });
});

describe("violatedCondition against shared vectors", () => {
  it("has a healthy vector mix", () => {
    expect(vectors.cases.length).toBeGreaterThan(100);
    const conditions = new Set(vectors.cases.map((c) => String(c.condition)));
    for (const wanted of ["null", "1", "2", "3", "distinct"]) {
      expect(conditions).toContain(wanted);
    }
  });

  it("agrees on every case", () => {
    for (const c of vectors.cases) {
      const rules: Rules = { p: c.p, k: c.k, m: c.from.length, variant: c.variant };
      const verdict = violatedCondition(rules, c.from, c.to);
      expect(verdict, JSON.stringify(c)).toBe(c.condition);
      expect(isLegal(rules, c.from, c.to), JSON.stringify(c)).toBe(c.legal);
    }
  });
});

describe("pair-based checking", () => {
  const rules: Rules = { p: 2, k: 3, m: 2, variant: "welter" };

  it("accepts the canonical legal pairing", () => {
    expect(checkPairs(rules, [3, 4], [[4, 0], [3, 1]])).toBeNull();
  });

  it("flags the order condition for the swapped pairing", () => {
    expect(checkPairs(rules, [3, 4], [[4, 1], [3, 0]])).toBe(3);
  });

  it("flags occupied targets", () => {
    expect(checkPairs(rules, [3, 4], [[4, 3]])).toBe("distinct");
  });

  it("flags unknown coins as structural", () => {
    expect(checkPairs(rules, [3, 4], [[5, 1]])).toBe("position");
  });

  it("flags empty moves", () => {
    expect(checkPairs(rules, [3, 4], [])).toBe(1);
  });
});
