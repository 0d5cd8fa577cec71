"""Text formats: matrix (.zfm), vector, ZFS, board, and core cache files.

All on-disk indices are 1-based; every parser is the exact inverse of its
serializer, and serializers emit canonical bytes so identical inputs always
produce identical files.
"""

from __future__ import annotations

import numpy as np

from .fields import FieldSpec
from .grid import BoardState, GridSpec
from .linalg import DenseMatrix, SparseMatrix, Vector
from .solver import CoreMatrix


class ParseError(ValueError):
    pass


def _fail(line_no: int, msg: str) -> None:
    raise ParseError(f"line {line_no}: {msg}")


def _lines(text: str) -> list[str]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def _parse_int(tok: str, line_no: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        _fail(line_no, f"expected integer {what}, got {tok!r}")


def _parse_field_line(line: str, line_no: int) -> FieldSpec:
    parts = line.split()
    try:
        if parts == ["field", "gf2"]:
            return FieldSpec.gf2()
        if len(parts) == 3 and parts[:2] == ["field", "gfp"]:
            return FieldSpec.prime(int(parts[2]))
    except ValueError as e:
        _fail(line_no, str(e))
    _fail(line_no, f"expected 'field gf2' or 'field gfp <p>', got {line!r}")


def _format_field_line(spec: FieldSpec) -> str:
    return "field gf2" if spec.modulus == 2 else f"field gfp {spec.modulus}"


def _parse_value(tok: str, spec: FieldSpec, line_no: int) -> int:
    v = _parse_int(tok, line_no, "value")
    if not 0 <= v < spec.modulus:
        _fail(line_no, f"value {v} is not a canonical residue mod {spec.modulus}")
    return v


# -- matrix ------------------------------------------------------------------

def parse_matrix(text: str) -> SparseMatrix:
    lines = _lines(text)
    if len(lines) < 2:
        _fail(len(lines), "matrix file needs a field line and a size line")
    spec = _parse_field_line(lines[0], 1)
    dims = lines[1].split()
    if len(dims) != 2:
        _fail(2, f"expected '<n_rows> <n_cols>', got {lines[1]!r}")
    n_rows = _parse_int(dims[0], 2, "row count")
    n_cols = _parse_int(dims[1], 2, "column count")
    if n_rows < 1 or n_cols < 1:
        _fail(2, "dimensions must be positive")
    triplets = []
    seen = set()
    for ln, line in enumerate(lines[2:], start=3):
        parts = line.split()
        if len(parts) != 3:
            _fail(ln, f"expected '<i> <j> <value>', got {line!r}")
        i = _parse_int(parts[0], ln, "row index")
        j = _parse_int(parts[1], ln, "column index")
        if not (1 <= i <= n_rows and 1 <= j <= n_cols):
            _fail(ln, f"entry ({i}, {j}) out of range")
        if (i, j) in seen:
            _fail(ln, f"duplicate entry at ({i}, {j})")
        seen.add((i, j))
        v = _parse_value(parts[2], spec, ln)
        if v != 0:
            triplets.append((i - 1, j - 1, v))
    return SparseMatrix.from_triplets(spec, n_rows, n_cols, triplets)


def format_matrix(a: SparseMatrix) -> str:
    out = [_format_field_line(a.spec), f"{a.n_rows} {a.n_cols}"]
    for i, j, v in a.triplets():
        out.append(f"{i + 1} {j + 1} {v}")
    return "\n".join(out) + "\n"


# -- vector ------------------------------------------------------------------

def parse_vector(text: str, spec: FieldSpec, expected_len: int | None = None) -> Vector:
    lines = _lines(text)
    values = [_parse_value(line.strip(), spec, ln)
              for ln, line in enumerate(lines, start=1)]
    if expected_len is not None and len(values) != expected_len:
        _fail(len(lines), f"expected {expected_len} values, got {len(values)}")
    return Vector(spec, values)


def format_vector(v: Vector) -> str:
    return "".join(f"{x}\n" for x in v.values.tolist())


# -- zero forcing set ---------------------------------------------------------

def parse_zfs(text: str, n: int) -> tuple[int, ...]:
    out = []
    seen = set()
    for ln, line in enumerate(_lines(text), start=1):
        v = _parse_int(line.strip(), ln, "vertex index")
        if not 1 <= v <= n:
            _fail(ln, f"vertex {v} out of range 1..{n}")
        if v in seen:
            _fail(ln, f"duplicate vertex {v}")
        seen.add(v)
        out.append(v - 1)
    if not out:
        _fail(1, "empty zero forcing set file")
    return tuple(out)


def format_zfs(z: tuple[int, ...]) -> str:
    return "".join(f"{v + 1}\n" for v in z)


# -- board --------------------------------------------------------------------

def parse_board(text: str) -> BoardState:
    lines = _lines(text)
    if not lines:
        _fail(1, "empty board file")
    dims = lines[0].split()
    if len(dims) != 2:
        _fail(1, f"expected '<rows> <cols>', got {lines[0]!r}")
    rows = _parse_int(dims[0], 1, "row count")
    cols = _parse_int(dims[1], 1, "column count")
    if rows < 1 or cols < 1:
        _fail(1, "board dimensions must be positive")
    if len(lines) != rows + 1:
        _fail(len(lines), f"expected {rows} board lines, got {len(lines) - 1}")
    cells = np.zeros(rows * cols, dtype=np.int64)
    for r, line in enumerate(lines[1:], start=0):
        if len(line) != cols or any(ch not in "01" for ch in line):
            _fail(r + 2, f"expected {cols} characters from {{0,1}}, got {line!r}")
        for c, ch in enumerate(line):
            cells[r * cols + c] = ch == "1"
    return BoardState.from_values(GridSpec(rows, cols), cells)


def format_board(b: BoardState) -> str:
    g = b.spec
    out = [f"{g.rows} {g.cols}"]
    grid = b.grid()
    for r in range(g.rows):
        out.append("".join("1" if x else "0" for x in grid[r]))
    return "\n".join(out) + "\n"


# -- core cache ----------------------------------------------------------------

def format_core(core: CoreMatrix, spec: FieldSpec, n: int) -> str:
    out = [
        _format_field_line(spec),
        f"n {n}",
        f"k {core.k}",
        "rows " + " ".join(str(v + 1) for v in core.row_labels),
        "cols " + " ".join(str(v + 1) for v in core.col_labels),
    ]
    for row in core.matrix.array:
        out.append(" ".join(str(x) for x in row.tolist()))
    return "\n".join(out) + "\n"


def parse_core(text: str) -> tuple[CoreMatrix, FieldSpec, int]:
    """Read back a core cache; returns (core, field, ambient dimension n)."""
    lines = _lines(text)
    if len(lines) < 5:
        _fail(len(lines), "core cache needs field, n, k, rows, cols lines")
    spec = _parse_field_line(lines[0], 1)

    def keyed_int(idx: int, key: str) -> int:
        parts = lines[idx].split()
        if len(parts) != 2 or parts[0] != key:
            _fail(idx + 1, f"expected '{key} <int>', got {lines[idx]!r}")
        return _parse_int(parts[1], idx + 1, key)

    n = keyed_int(1, "n")
    k = keyed_int(2, "k")

    def labels(idx: int, key: str) -> tuple[int, ...]:
        parts = lines[idx].split()
        if not parts or parts[0] != key:
            _fail(idx + 1, f"expected '{key} <indices>', got {lines[idx]!r}")
        vals = [_parse_int(t, idx + 1, "label") for t in parts[1:]]
        if len(vals) != k:
            _fail(idx + 1, f"expected {k} labels, got {len(vals)}")
        for v in vals:
            if not 1 <= v <= n:
                _fail(idx + 1, f"label {v} out of range 1..{n}")
        return tuple(v - 1 for v in vals)

    row_labels = labels(3, "rows")
    col_labels = labels(4, "cols")
    if len(lines) != 5 + k:
        _fail(len(lines), f"expected {k} matrix rows, got {len(lines) - 5}")
    entries = np.zeros((k, k), dtype=np.int64)
    for r in range(k):
        parts = lines[5 + r].split()
        if len(parts) != k:
            _fail(6 + r, f"expected {k} values, got {len(parts)}")
        for c, tok in enumerate(parts):
            entries[r, c] = _parse_value(tok, spec, 6 + r)
    core = CoreMatrix(DenseMatrix(spec, entries), row_labels, col_labels)
    return core, spec, n
