"""Command-line front end.

Exit codes: 0 solved/verified, 2 for a NO SOLUTION / negative verdict,
1 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from pathlib import Path

from . import fileio
from .fields import FieldSpec
from .forcing import (NotZeroForcingSetError, forcing_plan, greedy_find_zfs,
                      is_zfs, pattern_graph)
from .grid import (BoardState, GridSpec, grid_core, grid_matrix,
                   lightsout_preprocess, random_solvable, solve_board)
from .linalg import dense_from, dense_gaussian_solve, factorize
from .solver import SolverHandle, compute_core, solve

NO_SOLUTION = "NO SOLUTION"


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}")


def _load_matrix_and_zfs(a_path: str, z_path: str):
    a = fileio.parse_matrix(_read(a_path))
    if a.n_rows != a.n_cols:
        raise CliError(f"{a_path}: matrix must be square")
    z = fileio.parse_zfs(_read(z_path), a.n_rows)
    return a, z


def _handle_from_cache(a, z, cache_path: str) -> SolverHandle:
    core, spec, n = fileio.parse_core(_read(cache_path))
    if spec != a.spec or n != a.n_rows:
        raise CliError(f"{cache_path}: cache does not match the matrix")
    if core.col_labels != z:
        raise CliError(f"{cache_path}: cache columns do not match the ZFS file")
    plan = forcing_plan(pattern_graph(a), z)
    if core.row_labels != plan.terminals:
        raise CliError(f"{cache_path}: cache rows do not match the forcing plan")
    return SolverHandle(a, plan, core, factorize(core.matrix))


def cmd_solve(args) -> int:
    a, z = _load_matrix_and_zfs(args.matrix, args.zfs)
    b = fileio.parse_vector(_read(args.rhs), a.spec, a.n_rows)
    if args.core:
        handle = _handle_from_cache(a, z, args.core)
    else:
        plan = forcing_plan(pattern_graph(a), z)
        core = compute_core(a, plan)
        handle = SolverHandle(a, plan, core, factorize(core.matrix))
    x = solve(handle, b)
    if x is None:
        print(NO_SOLUTION)
        return 2
    sys.stdout.write(fileio.format_vector(x))
    return 0


def cmd_core(args) -> int:
    a, z = _load_matrix_and_zfs(args.matrix, args.zfs)
    plan = forcing_plan(pattern_graph(a), z)
    core = compute_core(a, plan)
    Path(args.output).write_text(fileio.format_core(core, a.spec, a.n_rows))
    return 0


def _lightsout_board(args) -> BoardState:
    g = GridSpec(args.rows, args.cols)
    if args.state:
        board = fileio.parse_board(_read(args.state))
        if board.spec != g:
            raise CliError(f"{args.state}: board is not {g.rows}x{g.cols}")
        return board
    if args.all_on:
        return BoardState.all_on(g)
    return random_solvable(g, args.seed)


def cmd_lightsout_solve(args) -> int:
    board = _lightsout_board(args)
    handle = lightsout_preprocess(board.spec)
    pattern = solve_board(handle, board)
    if args.random:
        sys.stdout.write(fileio.format_board(board))
        print()
    if pattern is None:
        print(NO_SOLUTION)
        return 2
    sys.stdout.write(fileio.format_board(pattern))
    return 0


def cmd_lightsout_core(args) -> int:
    if args.n < 2:
        raise CliError("n must be at least 2")
    core = grid_core(args.n)
    Path(args.output).write_text(
        fileio.format_core(core, FieldSpec.gf2(), args.n * args.n))
    return 0


def cmd_zfs_verify(args) -> int:
    a, z = _load_matrix_and_zfs(args.matrix, args.zfs)
    if is_zfs(pattern_graph(a), z):
        print("zero forcing set: yes")
        return 0
    print("zero forcing set: no")
    return 2


def cmd_zfs_find(args) -> int:
    a = fileio.parse_matrix(_read(args.matrix))
    if a.n_rows != a.n_cols:
        raise CliError(f"{args.matrix}: matrix must be square")
    z = greedy_find_zfs(pattern_graph(a))
    sys.stdout.write(fileio.format_zfs(z))
    return 0


def cmd_bench_grid(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
    except ValueError:
        raise CliError(f"bad --sizes value: {args.sizes!r}")
    if not sizes or any(s < 1 for s in sizes):
        raise CliError("--sizes needs positive integers")
    print(f"{'n':>6} {'k':>5} {'preprocess_s':>13} {'solve_ms':>10} {'dense_ms':>10}")
    for n in sizes:
        g = GridSpec(n, n)
        t0 = time.perf_counter()
        handle = lightsout_preprocess(g)
        prep = time.perf_counter() - t0
        boards = [random_solvable(g, seed) for seed in range(args.solves)]
        times = []
        for board in boards:
            t0 = time.perf_counter()
            solve_board(handle, board)
            times.append(time.perf_counter() - t0)
        med = statistics.median(times) * 1e3
        if n <= 16:
            dense = dense_from(grid_matrix(g))
            t0 = time.perf_counter()
            for board in boards[:5]:
                dense_gaussian_solve(dense, board.cells)
            dense_ms = f"{(time.perf_counter() - t0) / 5 * 1e3:10.3f}"
        else:
            dense_ms = f"{'-':>10}"
        print(f"{n:>6} {handle.k:>5} {prep:>13.3f} {med:>10.3f} {dense_ms}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(max_cells=args.max_cells, allowed_origin=args.origin)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zfsolve")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve Ax=b given a zero forcing set")
    p.add_argument("-A", dest="matrix", required=True, help="matrix file (.zfm)")
    p.add_argument("-b", dest="rhs", required=True, help="right-hand side file")
    p.add_argument("-Z", dest="zfs", required=True, help="zero forcing set file")
    p.add_argument("--core", help="core cache file from 'core -o'")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("core", help="precompute and cache the core matrix")
    p.add_argument("-A", dest="matrix", required=True)
    p.add_argument("-Z", dest="zfs", required=True)
    p.add_argument("-o", dest="output", required=True)
    p.set_defaults(func=cmd_core)

    lights = sub.add_parser("lightsout", help="lights-out grid commands")
    lsub = lights.add_subparsers(dest="subcommand", required=True)
    p = lsub.add_parser("solve", help="solve a lights-out board")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--state", help="board file")
    src.add_argument("--all-on", action="store_true")
    src.add_argument("--random", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_lightsout_solve)
    p = lsub.add_parser("core", help="cache the n×n grid core matrix")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-o", dest="output", required=True)
    p.set_defaults(func=cmd_lightsout_core)

    zfs = sub.add_parser("zfs", help="zero forcing set utilities")
    zsub = zfs.add_subparsers(dest="subcommand", required=True)
    p = zsub.add_parser("verify", help="check whether Z forces the pattern")
    p.add_argument("-A", dest="matrix", required=True)
    p.add_argument("-Z", dest="zfs", required=True)
    p.set_defaults(func=cmd_zfs_verify)
    p = zsub.add_parser("find", help="greedy search for a zero forcing set")
    p.add_argument("-A", dest="matrix", required=True)
    p.set_defaults(func=cmd_zfs_find)

    bench = sub.add_parser("bench", help="timing tables")
    bsub = bench.add_subparsers(dest="subcommand", required=True)
    p = bsub.add_parser("grid", help="grid preprocess/solve timings")
    p.add_argument("--sizes", default="64,128,256")
    p.add_argument("--solves", type=int, default=100)
    p.set_defaults(func=cmd_bench_grid)

    p = sub.add_parser("serve", help="run the lights-out HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--origin", default="*", help="allowed CORS origin")
    p.add_argument("--max-cells", type=int, default=256 * 256)
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 1
    try:
        return args.func(args)
    except (CliError, fileio.ParseError, NotZeroForcingSetError, ValueError,
            IndexError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
