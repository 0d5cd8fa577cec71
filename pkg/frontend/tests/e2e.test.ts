// End-to-end: drive the real solver service the way the UI does.
// Spawns `python3 -m zfsolve serve` (the package must be pip-installed).

import { ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { PlaygroundApi } from "../src/api.js";
import { applyOverlayPresses, createBoard, isAllOff, toggleCell,
         withOverlay } from "../src/board.js";

const PORT = 8873;
const BASE = `http://127.0.0.1:${PORT}`;

let service: ChildProcess;
const api = new PlaygroundApi(BASE);

async function waitForHealthy(timeoutMs: number): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const res = await fetch(`${BASE}/healthz`);
      if (res.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 250));
  }
  throw new Error("service did not become healthy");
}

beforeAll(async () => {
  service = spawn("python3", ["-m", "zfsolve", "serve", "--port", String(PORT)],
                  { stdio: "ignore" });
  await waitForHealthy(30_000);
}, 40_000);

afterAll(() => {
  service.kill();
});

describe("playground end to end", () => {
  it.each([3, 5, 8, 10])(
    "new game size %i: applying the solve overlay clears the board",
    async (size) => {
      const cells = await api.randomBoard(size, size, 1234 + size);
      let board = createBoard(size, size, cells);
      const res = await api.solveBoard(board);
      expect(res.solvable).toBe(true);
      board = withOverlay(board, res.presses!);
      board = applyOverlayPresses(board);
      expect(isAllOff(board)).toBe(true);
      expect(board.moveCount).toBe(res.pressCount);
    },
    30_000,
  );

  it("hint names a cell whose canonical solution bit is 1", async () => {
    for (const size of [3, 5, 8, 10]) {
      const cells = await api.randomBoard(size, size, 99 + size);
      const board = createBoard(size, size, cells);
      const [hint, solved] = [await api.hintBoard(board), await api.solveBoard(board)];
      expect(hint.solvable).toBe(true);
      if (hint.press === null) {
        expect(solved.pressCount).toBe(0);
      } else {
        expect(solved.presses![hint.press.row - 1][hint.press.col - 1]).toBe(1);
      }
    }
  }, 30_000);

  it("hint on an already-solved board is null", async () => {
    const res = await api.hintBoard(createBoard(3, 3));
    expect(res).toEqual({ solvable: true, press: null });
  });

  it("manual edit can reach an unsolvable state on a singular size", async () => {
    // 4x4 grids are singular; toggling one corner of a solvable board
    // leaves the unsolvable coset
    const cells = await api.randomBoard(4, 4, 7);
    const solvable = await api.solveBoard(createBoard(4, 4, cells));
    expect(solvable.solvable).toBe(true);
    const edited = toggleCell(createBoard(4, 4, cells), 0, 0);
    const res = await api.solveBoard(edited);
    expect(res).toEqual({ solvable: false, presses: null, pressCount: null });
  }, 30_000);

  it("seeded new game is reproducible", async () => {
    const a = await api.randomBoard(5, 5, 42);
    const b = await api.randomBoard(5, 5, 42);
    expect(a).toEqual(b);
  });
});
