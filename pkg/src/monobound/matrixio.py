"""Line-oriented matrix file formats.

Dense text: a header line holding n, then n rows of n whitespace-separated
reals.  Coordinate text: a header line holding "n nnz", then nnz lines
"i j value" with 1-based indices; unlisted entries are zero and duplicated
positions are an error.  Blank lines and lines whose first non-blank
character is '#' are ignored everywhere.
"""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from .errors import MatrixParseError


def read_matrix(path, fmt: str = "auto") -> np.ndarray:
    """Parse a matrix file; ``fmt`` is "dense", "coord", or "auto" (detected
    from the token count of the first content line)."""
    text = Path(path).read_text(encoding="utf-8")
    return parse_matrix(text, fmt=fmt, name=str(path))


def parse_matrix(text: str, fmt: str = "auto", name: str = "<input>") -> np.ndarray:
    """Parse dense or coordinate text into a float64 square matrix.

    Errors raise :class:`MatrixParseError` with a "name:line:" prefix.
    """
    lines = _content_lines(text)
    if not lines:
        raise MatrixParseError(f"{name}: no content lines")
    if fmt == "auto":
        width = len(lines[0][1])
        if width == 1:
            fmt = "dense"
        elif width == 2:
            fmt = "coord"
        else:
            raise MatrixParseError(
                f"{name}:{lines[0][0]}: header must be 'n' (dense) or 'n nnz' "
                f"(coordinate), got {width} tokens"
            )
    if fmt == "dense":
        return _parse_dense(lines, name)
    if fmt == "coord":
        return _parse_coord(lines, name)
    raise ValueError(f"unknown matrix format {fmt!r}")


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((lineno, stripped.split()))
    return out


def _parse_int(token: str, lineno: int, name: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise MatrixParseError(
            f"{name}:{lineno}: {what} must be an integer, got {token!r}"
        ) from None


def _parse_real(token: str, lineno: int, name: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise MatrixParseError(
            f"{name}:{lineno}: expected a real number, got {token!r}"
        ) from None
    if not math.isfinite(value):
        raise MatrixParseError(f"{name}:{lineno}: entries must be finite, got {token!r}")
    return value


def _parse_dense(lines, name: str) -> np.ndarray:
    lineno, header = lines[0]
    if len(header) != 1:
        raise MatrixParseError(f"{name}:{lineno}: dense header must be a single token 'n'")
    n = _parse_int(header[0], lineno, name, "matrix dimension")
    if n < 1:
        raise MatrixParseError(f"{name}:{lineno}: dimension must be positive, got {n}")
    rows = lines[1:]
    if len(rows) < n:
        raise MatrixParseError(f"{name}: expected {n} matrix rows, found {len(rows)}")
    if len(rows) > n:
        raise MatrixParseError(
            f"{name}:{rows[n][0]}: unexpected content after {n} matrix rows"
        )
    out = np.empty((n, n))
    for r, (lno, tokens) in enumerate(rows):
        if len(tokens) != n:
            raise MatrixParseError(
                f"{name}:{lno}: row {r + 1} has {len(tokens)} entries, expected {n}"
            )
        out[r] = [_parse_real(tok, lno, name) for tok in tokens]
    return out


def _parse_coord(lines, name: str) -> np.ndarray:
    lineno, header = lines[0]
    if len(header) != 2:
        raise MatrixParseError(f"{name}:{lineno}: coordinate header must be 'n nnz'")
    n = _parse_int(header[0], lineno, name, "matrix dimension")
    nnz = _parse_int(header[1], lineno, name, "entry count")
    if n < 1:
        raise MatrixParseError(f"{name}:{lineno}: dimension must be positive, got {n}")
    if nnz < 0:
        raise MatrixParseError(f"{name}:{lineno}: entry count must be nonnegative, got {nnz}")
    entries = lines[1:]
    if len(entries) < nnz:
        raise MatrixParseError(f"{name}: expected {nnz} entry lines, found {len(entries)}")
    if len(entries) > nnz:
        raise MatrixParseError(
            f"{name}:{entries[nnz][0]}: unexpected content after {nnz} entry lines"
        )
    out = np.zeros((n, n))
    seen: set[tuple[int, int]] = set()
    for lno, tokens in entries:
        if len(tokens) != 3:
            raise MatrixParseError(f"{name}:{lno}: entry line must be 'i j value'")
        i = _parse_int(tokens[0], lno, name, "row index")
        j = _parse_int(tokens[1], lno, name, "column index")
        if not 1 <= i <= n:
            raise MatrixParseError(f"{name}:{lno}: row index {i} outside 1..{n}")
        if not 1 <= j <= n:
            raise MatrixParseError(f"{name}:{lno}: column index {j} outside 1..{n}")
        if (i, j) in seen:
            raise MatrixParseError(f"{name}:{lno}: duplicate entry for position ({i}, {j})")
        seen.add((i, j))
        out[i - 1, j - 1] = _parse_real(tokens[2], lno, name)
    return out


def format_dense(matrix) -> str:
    """Dense-text serialization at 17 significant digits, so a write/read
    round trip reproduces the exact float64 values."""
    m = np.asarray(matrix, dtype=float)
    lines = [str(m.shape[0])]
    for row in m:
        lines.append(" ".join(f"{x:.17g}" for x in row))
    return "\n".join(lines) + "\n"


def write_dense(matrix, path) -> None:
    """Write a matrix to ``path`` in dense-text format."""
    Path(path).write_text(format_dense(matrix), encoding="utf-8")
