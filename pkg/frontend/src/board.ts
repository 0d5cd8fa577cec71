// Pure board state for the playground. Clicks are simulated locally
// (closed-neighborhood flip over GF(2)); the server is only consulted for
// solve / hint / new game.

export interface UiBoard {
  rows: number;
  cols: number;
  cells: number[][];
  overlay: number[][] | null;
  moveCount: number;
}

function zeros(rows: number, cols: number): number[][] {
  return Array.from({ length: rows }, () => Array(cols).fill(0));
}

function copyGrid(grid: number[][]): number[][] {
  return grid.map((row) => row.slice());
}

function checkGrid(grid: number[][], rows: number, cols: number, what: string): void {
  if (grid.length !== rows || grid.some((row) => row.length !== cols)) {
    throw new Error(`${what} must be ${rows}x${cols}`);
  }
  for (const row of grid) {
    for (const v of row) {
      if (v !== 0 && v !== 1) {
        throw new Error(`${what} entries must be 0 or 1`);
      }
    }
  }
}

export function createBoard(rows: number, cols: number, cells?: number[][]): UiBoard {
  if (rows < 1 || cols < 1) {
    throw new Error("board dimensions must be positive");
  }
  const grid = cells ? copyGrid(cells) : zeros(rows, cols);
  checkGrid(grid, rows, cols, "cells");
  return { rows, cols, cells: grid, overlay: null, moveCount: 0 };
}

function inRange(board: UiBoard, row: number, col: number): void {
  if (row < 0 || row >= board.rows || col < 0 || col >= board.cols) {
    throw new Error(`cell (${row}, ${col}) out of range`);
  }
}

/** Press at (row, col): flip the cell and its orthogonal neighbors. */
export function clickCell(board: UiBoard, row: number, col: number): UiBoard {
  inRange(board, row, col);
  const cells = copyGrid(board.cells);
  const flips: Array<[number, number]> = [
    [row - 1, col], [row, col - 1], [row, col], [row, col + 1], [row + 1, col],
  ];
  for (const [r, c] of flips) {
    if (r >= 0 && r < board.rows && c >= 0 && c < board.cols) {
      cells[r][c] ^= 1;
    }
  }
  return { ...board, cells, overlay: null, moveCount: board.moveCount + 1 };
}

/** Manual-edit flip of one cell; not a press, not counted as a move. */
export function toggleCell(board: UiBoard, row: number, col: number): UiBoard {
  inRange(board, row, col);
  const cells = copyGrid(board.cells);
  cells[row][col] ^= 1;
  return { ...board, cells, overlay: null };
}

export function isAllOff(board: UiBoard): boolean {
  return board.cells.every((row) => row.every((v) => v === 0));
}

export function withOverlay(board: UiBoard, presses: number[][]): UiBoard {
  checkGrid(presses, board.rows, board.cols, "overlay");
  return { ...board, overlay: copyGrid(presses) };
}

export function clearOverlay(board: UiBoard): UiBoard {
  return { ...board, overlay: null };
}

/**
 * Replay an overlay as real clicks, row-major. Clicking clears the overlay,
 * so the pattern is captured first.
 */
export function applyOverlayPresses(board: UiBoard): UiBoard {
  if (!board.overlay) {
    return board;
  }
  const presses = copyGrid(board.overlay);
  let out: UiBoard = board;
  for (let r = 0; r < board.rows; r++) {
    for (let c = 0; c < board.cols; c++) {
      if (presses[r][c]) {
        out = clickCell(out, r, c);
      }
    }
  }
  return out;
}
