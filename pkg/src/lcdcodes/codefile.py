"""Reading and writing code description files.

Format (``#`` starts a comment, blank lines ignored)::

    GF(2^2) mod 1,1,1
    linear                  # or: subfield-linear
    rows 2 cols 4
    1 0 w 0
    0 1 1 w

Entries are element tokens: ``0``, base-10 prime-field integers, ``w``,
``w^k`` and sums of ``c*w^k`` terms.
"""

from __future__ import annotations

import re
from pathlib import Path

from lcdcodes.codes import AnyCode, LinearCode, SubfieldLinearCode
from lcdcodes.errors import LCDError, ParseError
from lcdcodes.field import FieldSpec
from lcdcodes.matrix import MatrixFq

LINEAR = "linear"
SUBFIELD_LINEAR = "subfield-linear"

_FIELD_RE = re.compile(r"^GF\(\s*(\d+)\s*\^\s*(\d+)\s*\)\s+mod\s+([\d,\s]+)$")
_DIMS_RE = re.compile(r"^rows\s+(\d+)\s+cols\s+(\d+)$")


def parse_field(text: str) -> FieldSpec:
    m = _FIELD_RE.match(text.strip())
    if m is None:
        raise ParseError(f"bad field line {text.strip()!r}; expected 'GF(p^m) mod c0,c1,...'")
    p, deg = int(m.group(1)), int(m.group(2))
    coeffs = [int(c) for c in m.group(3).replace(" ", "").split(",") if c]
    if len(coeffs) != deg + 1:
        raise ParseError(f"GF({p}^{deg}) needs {deg + 1} modulus coefficients, got {len(coeffs)}")
    return FieldSpec(p, coeffs)


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def parse_codefile(text: str) -> AnyCode:
    lines = _content_lines(text)
    if len(lines) < 3:
        raise ParseError("a code file needs field, category and dimension lines")
    spec = parse_field(lines[0][1])
    category = lines[1][1]
    if category not in (LINEAR, SUBFIELD_LINEAR):
        raise ParseError(f"line {lines[1][0]}: category must be 'linear' or 'subfield-linear'")
    dims = _DIMS_RE.match(lines[2][1])
    if dims is None:
        raise ParseError(f"line {lines[2][0]}: expected 'rows R cols N'")
    nrows, ncols = int(dims.group(1)), int(dims.group(2))
    body = lines[3:]
    if len(body) != nrows:
        raise ParseError(f"expected {nrows} matrix rows, found {len(body)}")
    rows = []
    for no, line in body:
        tokens = line.split()
        if len(tokens) != ncols:
            raise ParseError(f"line {no}: expected {ncols} entries, found {len(tokens)}")
        try:
            rows.append([spec.parse(t) for t in tokens])
        except ParseError as exc:
            raise ParseError(f"line {no}: {exc}") from None
    G = MatrixFq(spec, rows, ncols=ncols)
    try:
        return LinearCode(G) if category == LINEAR else SubfieldLinearCode(G)
    except LCDError as exc:
        raise type(exc)(f"generator rejected: {exc}") from None


def read_codefile(path: str | Path) -> AnyCode:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_codefile(text)


def category_of(C: AnyCode) -> str:
    return LINEAR if isinstance(C, LinearCode) else SUBFIELD_LINEAR


def format_codefile(C: AnyCode, comments: list[str] | None = None) -> str:
    G = C.generator
    out = [f"# {c}" for c in comments or []]
    out.append(C.spec.describe())
    out.append(category_of(C))
    out.append(f"rows {G.nrows} cols {G.ncols}")
    out.extend(G.format())
    return "\n".join(out) + "\n"
