// End-to-end play against the real server: spawns `pwelter serve`, runs a
// scripted game (engine first, never loses), checks 422 condition indices
// for illegal moves, and the board/diagram duality on every ply.

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiError, PlayClient } from "../src/api.js";
import { diagramMatchesServer } from "../src/view.js";
import { checkPairs } from "../src/validator.js";
import type { MovePair, SessionPayload } from "../src/types.js";

const port = 8900 + Math.floor(Math.random() * 100);
const base = `http://127.0.0.1:${port}`;
let server: ChildProcess;
const client = new PlayClient(base);

async function waitForServer(): Promise<void> {
  for (let attempt = 0; attempt < 100; attempt++) {
    try {
      const response = await fetch(`${base}/api/session/warmup-probe`);
      if (response.status === 404) return;
    } catch {
      /* not listening yet */
    }
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
  throw new Error("server did not come up");
}

beforeAll(async () => {
  server = spawn("python3", ["-m", "pwelter.cli", "serve", "--port", String(port)], {
    stdio: "ignore",
  });
  await waitForServer();
}, 60_000);

afterAll(() => {
  server?.kill("SIGTERM");
});

function assertDuality(state: SessionPayload) {
  expect(
    diagramMatchesServer(state.position, state.partition),
    `duality broke at position ${state.position}`,
  ).toBe(true);
}

/** Scripted human: first pair the advisory validator accepts. */
function scriptedMove(state: SessionPayload): MovePair[] {
  const coins = [...state.position].sort((a, b) => a - b);
  const occupied = new Set(coins);
  for (const coin of coins) {
    for (let target = 0; target < coin; target++) {
      if (occupied.has(target)) continue;
      const pairs: MovePair[] = [[coin, target]];
      if (checkPairs(state.rules, state.position, pairs) === null) return pairs;
    }
  }
  throw new Error(`no legal scripted move from ${state.position}`);
}

describe("scripted session from {3,4}, p=2, k=2, engine first", () => {
  it("ends in engine victory with duality at every ply", async () => {
    const created = await client.createSession({
      p: 2,
      k: 2,
      coins: [3, 4],
      engine_first: true,
    });
    expect(created.initial_sg.value).toBe(6);
    expect(created.engine_move).not.toBeNull();
    expect(created.engine_move!.losing_spot).toBe(false);
    expect(created.engine_move!.sg.value).toBe(0);

    let state = created.session;
    assertDuality(state);
    let plies = 0;
    while (!state.over) {
      expect(state.turn).toBe("human");
      const response = await client.move(state.id, scriptedMove(state));
      state = response.state;
      assertDuality(state);
      plies += 1;
      expect(plies).toBeLessThan(40);
    }
    expect(state.winner).toBe("engine");
  }, 30_000);

  it("engine wins across several scripted rematches", async () => {
    for (let game = 0; game < 3; game++) {
      const created = await client.createSession({
        p: 2,
        k: 2,
        coins: [3, 4],
        engine_first: true,
      });
      let state = created.session;
      let guard = 0;
      while (!state.over) {
        const response = await client.move(state.id, scriptedMove(state));
        state = response.state;
        assertDuality(state);
        guard += 1;
        expect(guard).toBeLessThan(40);
      }
      expect(state.winner).toBe("engine");
    }
  }, 30_000);
});

describe("illegal moves return 422 with the violated condition", () => {
  async function expectRejection(
    k: number,
    pairs: MovePair[],
    condition: 1 | 2 | 3 | "distinct" | "position",
  ) {
    const created = await client.createSession({
      p: 2,
      k,
      coins: [3, 4],
      engine_first: false,
    });
    try {
      await client.move(created.session.id, pairs);
      expect.unreachable("move should have been rejected");
    } catch (error) {
      expect(error).toBeInstanceOf(ApiError);
      const api = error as ApiError;
      expect(api.status).toBe(422);
      expect(api.rejection?.condition).toBe(condition);
      // The advisory validator foresees the same verdict.
      expect(checkPairs(created.session.rules, created.session.position, pairs)).toBe(
        condition,
      );
    }
  }

  it("order condition (3) for the swapped two-coin move at k=3", async () => {
    await expectRejection(3, [[4, 1], [3, 0]], 3);
  });

  it("moved-coin count (1) for a two-coin move at k=2", async () => {
    await expectRejection(2, [[4, 0], [3, 1]], 1);
  });

  it("upward slide (2)", async () => {
    await expectRejection(2, [[3, 5]], 2);
  });

  it("occupied target (distinct)", async () => {
    await expectRejection(3, [[4, 3]], "distinct");
  });

  it("unknown coin (position)", async () => {
    await expectRejection(2, [[6, 1]], "position");
  });
});

describe("hints", () => {
  it("h=0 highlights the winning reply from {3,4}", async () => {
    const created = await client.createSession({
      p: 2,
      k: 2,
      coins: [3, 4],
      engine_first: false,
    });
    const hints = await client.hints(created.session.id, 0);
    expect(hints.options).toContainEqual({ pairs: [[4, 2]], position: [2, 3], sg: 0 });
  });
});
