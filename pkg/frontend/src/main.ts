// DOM wiring for the playground. One UiBoard is the whole game state;
// every interaction replaces it and re-renders.

import { PlaygroundApi } from "./api.js";
import { UiBoard, clickCell, createBoard, isAllOff, toggleCell,
         withOverlay } from "./board.js";

const SIZES = [3, 5, 8, 10, 16];
// the solver service usually runs on its own port; override with ?api=<url>
const apiBase = new URLSearchParams(window.location.search).get("api")
  ?? "http://127.0.0.1:8000";
const api = new PlaygroundApi(apiBase);

let board: UiBoard = createBoard(5, 5);
let hintCell: { row: number; col: number } | null = null;
let banner = "";
let editMode = false;
// later requests supersede: responses are dropped unless still current
let requestSeq = 0;

const boardEl = document.getElementById("board") as HTMLDivElement;
const bannerEl = document.getElementById("banner") as HTMLDivElement;
const movesEl = document.getElementById("moves") as HTMLSpanElement;
const sizeEl = document.getElementById("size") as HTMLSelectElement;
const editEl = document.getElementById("edit") as HTMLInputElement;

function setBoard(next: UiBoard, nextBanner = ""): void {
  board = next;
  banner = nextBanner;
  if (!nextBanner && isAllOff(board) && board.moveCount > 0) {
    banner = `solved in ${board.moveCount} moves`;
  }
  hintCell = null;
  render();
}

function onCellClick(row: number, col: number): void {
  requestSeq++; // a click supersedes any pending hint/solve response
  if (editMode) {
    setBoard(toggleCell(board, row, col));
  } else {
    setBoard(clickCell(board, row, col));
  }
}

async function newGame(rows: number, cols: number, seed?: number): Promise<void> {
  const token = ++requestSeq;
  try {
    const used = seed ?? Math.floor(Math.random() * 2 ** 31);
    const cells = await api.randomBoard(rows, cols, used);
    if (token !== requestSeq) return;
    setBoard(createBoard(rows, cols, cells));
  } catch (err) {
    if (token !== requestSeq) return;
    banner = `service error: ${(err as Error).message}`;
    render();
  }
}

async function requestSolve(): Promise<void> {
  const token = ++requestSeq;
  try {
    const res = await api.solveBoard(board);
    if (token !== requestSeq) return;
    if (!res.solvable || res.presses === null) {
      banner = "not solvable: edit a cell or start a new game";
      render();
      return;
    }
    board = withOverlay(board, res.presses);
    banner = `overlay shows a ${res.pressCount}-press solution`;
    render();
  } catch (err) {
    if (token !== requestSeq) return;
    banner = `service error: ${(err as Error).message}`;
    render();
  }
}

async function requestHint(): Promise<void> {
  const token = ++requestSeq;
  try {
    const res = await api.hintBoard(board);
    if (token !== requestSeq) return;
    if (!res.solvable) {
      banner = "not solvable: edit a cell or start a new game";
    } else if (res.press === null) {
      banner = "already solved";
    } else {
      hintCell = { row: res.press.row - 1, col: res.press.col - 1 };
      banner = "hint: press the highlighted cell";
    }
    render();
  } catch (err) {
    if (token !== requestSeq) return;
    banner = `service error: ${(err as Error).message}`;
    render();
  }
}

function render(): void {
  boardEl.style.gridTemplateColumns = `repeat(${board.cols}, 2.2rem)`;
  boardEl.replaceChildren();
  for (let r = 0; r < board.rows; r++) {
    for (let c = 0; c < board.cols; c++) {
      const cell = document.createElement("button");
      cell.className = "cell" + (board.cells[r][c] ? " on" : "");
      if (board.overlay && board.overlay[r][c]) {
        cell.classList.add("press");
      }
      if (hintCell && hintCell.row === r && hintCell.col === c) {
        cell.classList.add("hint");
      }
      cell.addEventListener("click", () => onCellClick(r, c));
      boardEl.appendChild(cell);
    }
  }
  bannerEl.textContent = banner;
  movesEl.textContent = String(board.moveCount);
}

function init(): void {
  for (const s of SIZES) {
    const opt = document.createElement("option");
    opt.value = String(s);
    opt.textContent = `${s} × ${s}`;
    if (s === 5) opt.selected = true;
    sizeEl.appendChild(opt);
  }
  sizeEl.addEventListener("change", () => {
    const s = Number(sizeEl.value);
    void newGame(s, s);
  });
  editEl.addEventListener("change", () => {
    editMode = editEl.checked;
  });
  document.getElementById("new")!.addEventListener("click", () => {
    const s = Number(sizeEl.value);
    void newGame(s, s);
  });
  document.getElementById("solve")!.addEventListener("click", () => void requestSolve());
  document.getElementById("hint")!.addEventListener("click", () => void requestHint());
  void newGame(5, 5);
}

init();
