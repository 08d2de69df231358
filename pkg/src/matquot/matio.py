"""Reading and writing the plain-text matrix format.

A file holds one matrix: a header line ``<rows> <cols>`` followed by
one line per row of whitespace-separated scalar literals.  Blank lines
and lines whose first non-space character is ``#`` are ignored.  The
format round-trips every value bit-exactly.
"""

from __future__ import annotations

import re

from .errors import MatrixParseError
from .matrix import Matrix

_TOKEN_RE = re.compile(r"\S+")


def format_matrix(m: Matrix) -> str:
    ring = m.ring
    lines = [f"{m.rows} {m.cols}"]
    for row in m.data:
        lines.append(" ".join(ring.format(e) for e in row))
    return "\n".join(lines) + "\n"


def matrix_to_json(m: Matrix) -> dict:
    ring = m.ring
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[ring.format(e) for e in row] for row in m.data],
    }


def _significant_lines(text: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.lstrip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, line


def parse_matrix_text(text: str, ring, source: str = "<input>") -> Matrix:
    lines = _significant_lines(text)

    try:
        lineno, header = next(lines)
    except StopIteration:
        raise MatrixParseError("missing header line", source, 1, 1) from None
    tokens = list(_TOKEN_RE.finditer(header))
    if len(tokens) != 2:
        raise MatrixParseError("header must be '<rows> <cols>'", source, lineno, 1)
    dims = []
    for tok in tokens:
        if not tok.group().isdigit():
            raise MatrixParseError(
                f"bad dimension {tok.group()!r}", source, lineno, tok.start() + 1
            )
        dims.append(int(tok.group()))
    rows, cols = dims

    data = []
    for _ in range(rows):
        if cols == 0:
            data.append([])
            continue
        try:
            lineno, line = next(lines)
        except StopIteration:
            raise MatrixParseError(
                f"expected {rows} data rows, got {len(data)}", source, lineno, 1
            ) from None
        tokens = list(_TOKEN_RE.finditer(line))
        if len(tokens) != cols:
            col = tokens[cols].start() + 1 if len(tokens) > cols else len(line) + 1
            raise MatrixParseError(
                f"expected {cols} entries, got {len(tokens)}", source, lineno, col
            )
        row = []
        for tok in tokens:
            try:
                row.append(ring.parse(tok.group()))
            except ValueError as exc:
                raise MatrixParseError(str(exc), source, lineno, tok.start() + 1) from None
        data.append(row)

    for lineno, line in lines:
        tok = _TOKEN_RE.search(line)
        raise MatrixParseError("unexpected extra data", source, lineno, tok.start() + 1)

    return Matrix(ring, data, cols=cols)


def parse_matrix_file(path: str, ring) -> Matrix:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix_text(fh.read(), ring, source=str(path))
