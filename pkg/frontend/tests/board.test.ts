import { describe, expect, it } from "vitest";

import { applyOverlayPresses, clearOverlay, clickCell, createBoard,
         isAllOff, toggleCell, withOverlay } from "../src/board.js";

describe("createBoard", () => {
  it("starts all off with zero moves", () => {
    const b = createBoard(3, 4);
    expect(b.cells).toEqual([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]);
    expect(b.moveCount).toBe(0);
    expect(b.overlay).toBeNull();
    expect(isAllOff(b)).toBe(true);
  });

  it("rejects bad dimensions and bad cells", () => {
    expect(() => createBoard(0, 3)).toThrow();
    expect(() => createBoard(2, 2, [[1, 1]])).toThrow();
    expect(() => createBoard(2, 2, [[1, 2], [0, 0]])).toThrow();
  });
});

describe("clickCell", () => {
  it("flips the closed neighborhood", () => {
    const b = clickCell(createBoard(3, 3), 1, 1);
    expect(b.cells).toEqual([[0, 1, 0], [1, 1, 1], [0, 1, 0]]);
    expect(b.moveCount).toBe(1);
  });

  it("clips at the border", () => {
    const b = clickCell(createBoard(1, 1), 0, 0);
    expect(b.cells).toEqual([[1]]);
  });

  it("is an involution on the cells", () => {
    const start = createBoard(4, 4, [
      [1, 0, 0, 1], [0, 1, 1, 0], [0, 0, 0, 0], [1, 1, 0, 1],
    ]);
    const twice = clickCell(clickCell(start, 2, 1), 2, 1);
    expect(twice.cells).toEqual(start.cells);
    expect(twice.moveCount).toBe(2);
  });

  it("clears any overlay", () => {
    let b = withOverlay(createBoard(2, 2), [[1, 0], [0, 0]]);
    b = clickCell(b, 0, 0);
    expect(b.overlay).toBeNull();
  });

  it("rejects out-of-range cells", () => {
    expect(() => clickCell(createBoard(2, 2), 2, 0)).toThrow();
  });
});

describe("toggleCell", () => {
  it("flips exactly one cell and no move is counted", () => {
    const b = toggleCell(createBoard(3, 3), 1, 1);
    expect(b.cells).toEqual([[0, 0, 0], [0, 1, 0], [0, 0, 0]]);
    expect(b.moveCount).toBe(0);
  });
});

describe("overlay", () => {
  it("must match the board shape", () => {
    expect(() => withOverlay(createBoard(2, 2), [[1, 0]])).toThrow();
  });

  it("replaying the overlay presses applies them as clicks", () => {
    // pressing every cell of a 2x2 board turns all lights on from off
    let b = withOverlay(createBoard(2, 2), [[1, 1], [1, 1]]);
    b = applyOverlayPresses(b);
    expect(b.cells).toEqual([[1, 1], [1, 1]]);
    expect(b.moveCount).toBe(4);
    expect(clearOverlay(b).overlay).toBeNull();
  });
});
