"""JSON-over-HTTP lights-out service for the playground UI.

Stateless: the only cross-request structure is a cache of solver handles
keyed by board shape, built once under a lock and immutable afterwards, so
responses never depend on request order.
"""

from __future__ import annotations

import threading
from typing import Any, Optional

import numpy as np
from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from .grid import BoardState, GridHandle, GridSpec, lightsout_preprocess, \
    random_solvable, solve_board
from .linalg import Vector
from .fields import FieldSpec

DEFAULT_MAX_CELLS = 256 * 256


class _BadRequest(ValueError):
    pass


def _require_shape(payload: Any, max_cells: int) -> GridSpec:
    if not isinstance(payload, dict):
        raise _BadRequest("body must be a JSON object")
    rows, cols = payload.get("rows"), payload.get("cols")
    if not isinstance(rows, int) or not isinstance(cols, int) \
            or isinstance(rows, bool) or isinstance(cols, bool):
        raise _BadRequest("rows and cols must be integers")
    if rows < 1 or cols < 1:
        raise _BadRequest("rows and cols must be positive")
    if rows * cols > max_cells:
        raise _BadRequest(f"board exceeds the {max_cells}-cell cap")
    return GridSpec(rows, cols)


def _require_board(payload: Any, max_cells: int) -> BoardState:
    g = _require_shape(payload, max_cells)
    cells = payload.get("cells")
    if not isinstance(cells, list) or len(cells) != g.rows:
        raise _BadRequest("cells must be a list with one row per grid row")
    flat = np.zeros(g.n_cells, dtype=np.int64)
    for r, row in enumerate(cells):
        if not isinstance(row, list) or len(row) != g.cols:
            raise _BadRequest(f"cells[{r}] must be a list of {g.cols} entries")
        for c, v in enumerate(row):
            if v not in (0, 1) or isinstance(v, bool):
                raise _BadRequest("cell values must be 0 or 1")
            flat[r * g.cols + c] = v
    return BoardState(g, Vector(FieldSpec.gf2(), flat))


def _cells_of(board: BoardState) -> list[list[int]]:
    return board.grid().tolist()


def create_app(max_cells: int = DEFAULT_MAX_CELLS,
               allowed_origin: str = "*") -> FastAPI:
    app = FastAPI(title="lights-out solver")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[allowed_origin],
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )
    handles: dict[tuple[int, int], GridHandle] = {}
    lock = threading.Lock()

    def handle_for(g: GridSpec) -> GridHandle:
        key = (g.rows, g.cols)
        with lock:
            if key not in handles:
                handles[key] = lightsout_preprocess(g)
            return handles[key]

    async def read_board(request: Request) -> BoardState:
        try:
            payload = await request.json()
        except Exception:
            raise _BadRequest("body is not valid JSON")
        return _require_board(payload, max_cells)

    def canonical_solution(board: BoardState) -> Optional[BoardState]:
        return solve_board(handle_for(board.spec), board)

    @app.exception_handler(_BadRequest)
    async def bad_request(_request: Request, exc: _BadRequest) -> JSONResponse:
        return JSONResponse({"error": str(exc)}, status_code=400)

    @app.post("/api/board/solve")
    async def board_solve(request: Request) -> JSONResponse:
        board = await read_board(request)
        presses = canonical_solution(board)
        if presses is None:
            body = {"solvable": False, "presses": None, "pressCount": None}
        else:
            body = {
                "solvable": True,
                "presses": _cells_of(presses),
                "pressCount": int(presses.cells.values.sum()),
            }
        return JSONResponse(body)

    @app.post("/api/board/hint")
    async def board_hint(request: Request) -> JSONResponse:
        board = await read_board(request)
        presses = canonical_solution(board)
        if presses is None:
            return JSONResponse({"solvable": False, "press": None})
        hits = np.nonzero(presses.cells.values)[0]
        if hits.size == 0:
            return JSONResponse({"solvable": True, "press": None})
        first = int(hits[0])
        cols = board.spec.cols
        return JSONResponse({
            "solvable": True,
            "press": {"row": first // cols + 1, "col": first % cols + 1},
        })

    @app.get("/api/board/random")
    async def board_random(request: Request) -> JSONResponse:
        params = request.query_params
        try:
            rows = int(params["rows"])
            cols = int(params["cols"])
            seed = int(params["seed"])
        except (KeyError, ValueError):
            raise _BadRequest("rows, cols and seed must be given as integers")
        g = _require_shape({"rows": rows, "cols": cols}, max_cells)
        return JSONResponse({"cells": _cells_of(random_solvable(g, seed))})

    @app.get("/healthz")
    async def healthz() -> PlainTextResponse:
        return PlainTextResponse("ok")

    return app
