// Thin client for the solver service; consumes its JSON endpoints verbatim.

import type { UiBoard } from "./board.js";

export interface SolveResponse {
  solvable: boolean;
  presses: number[][] | null;
  pressCount: number | null;
}

export interface HintResponse {
  solvable: boolean;
  press: { row: number; col: number } | null;
}

async function postJson<T>(url: string, payload: unknown): Promise<T> {
  const res = await fetch(url, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(payload),
  });
  if (!res.ok) {
    throw new Error(`${url} failed: ${res.status}`);
  }
  return (await res.json()) as T;
}

function boardPayload(board: UiBoard) {
  return { rows: board.rows, cols: board.cols, cells: board.cells };
}

export class PlaygroundApi {
  constructor(private baseUrl: string) {}

  solveBoard(board: UiBoard): Promise<SolveResponse> {
    return postJson(`${this.baseUrl}/api/board/solve`, boardPayload(board));
  }

  hintBoard(board: UiBoard): Promise<HintResponse> {
    return postJson(`${this.baseUrl}/api/board/hint`, boardPayload(board));
  }

  async randomBoard(rows: number, cols: number, seed: number): Promise<number[][]> {
    const url = `${this.baseUrl}/api/board/random?rows=${rows}&cols=${cols}&seed=${seed}`;
    const res = await fetch(url);
    if (!res.ok) {
      throw new Error(`${url} failed: ${res.status}`);
    }
    const data = (await res.json()) as { cells: number[][] };
    return data.cells;
  }
}
