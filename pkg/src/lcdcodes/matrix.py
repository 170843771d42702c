"""Dense exact matrices over F_q.

Entries are held as field indices (see :mod:`lcdcodes.field`) in a tuple of
row tuples; indexing returns :class:`FieldElement` objects. Vectors are row
vectors; "nullspace" is the kernel ``{x : M x^T = 0}``, whose rows are
orthogonal to every row of M (the dual of the row space).
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from lcdcodes.errors import FieldMismatch, NonSquare, ShapeMismatch, Singular
from lcdcodes.field import FieldElement, FieldSpec

Rows = list[list[int]]


def _as_index(spec: FieldSpec, x) -> int:
    if isinstance(x, FieldElement):
        if x.field != spec:
            raise FieldMismatch("entry belongs to a different field")
        return x.value
    if isinstance(x, int):
        return x % spec.p
    if isinstance(x, str):
        return spec.parse(x).value
    raise TypeError(f"cannot use {x!r} as a matrix entry")


def vector(spec: FieldSpec, entries: Iterable) -> tuple[FieldElement, ...]:
    """Build a vector from elements, prime-field integers or element tokens."""
    return tuple(FieldElement(spec, _as_index(spec, x)) for x in entries)


def _vec_index(spec: FieldSpec, v: Sequence) -> list[int]:
    return [_as_index(spec, x) for x in v]


class MatrixFq:
    """An immutable ``rows x cols`` matrix over a :class:`FieldSpec`.

    Entries may be given as FieldElements, integers (prime-subfield values) or
    element tokens such as ``"w^2"``.
    """

    __slots__ = ("spec", "nrows", "ncols", "_rows")

    def __init__(self, spec: FieldSpec, entries: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(tuple(_as_index(spec, x) for x in row) for row in entries)
        if ncols is None:
            if not rows:
                raise ShapeMismatch("column count required for a matrix with no rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeMismatch("ragged matrix rows")
        self.spec = spec
        self.nrows = len(rows)
        self.ncols = ncols
        self._rows = rows

    @classmethod
    def _raw(cls, spec: FieldSpec, rows: Iterable[Sequence[int]], ncols: int) -> MatrixFq:
        m = object.__new__(cls)
        m.spec = spec
        m._rows = tuple(tuple(r) for r in rows)
        m.nrows = len(m._rows)
        m.ncols = ncols
        return m

    @classmethod
    def zeros(cls, spec: FieldSpec, nrows: int, ncols: int) -> MatrixFq:
        return cls._raw(spec, [[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> MatrixFq:
        return cls._raw(spec, [[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_vectors(cls, spec: FieldSpec, vectors: Iterable[Sequence], ncols: int) -> MatrixFq:
        return cls(spec, vectors, ncols=ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def indices(self) -> tuple[tuple[int, ...], ...]:
        """Raw field indices, row-major."""
        return self._rows

    def __getitem__(self, key):
        i, j = key
        return FieldElement(self.spec, self._rows[i][j])

    def row(self, i: int) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.spec, a) for a in self._rows[i])

    def rows(self) -> list[tuple[FieldElement, ...]]:
        return [self.row(i) for i in range(self.nrows)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixFq):
            return NotImplemented
        return self.spec == other.spec and self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(self.spec.format_index(a) for a in r) for r in self._rows)
        return f"MatrixFq({self.nrows}x{self.ncols} over F_{self.spec.q}: [{body}])"

    def format(self) -> list[str]:
        return [" ".join(self.spec.format_index(a) for a in r) for r in self._rows]

    def _check(self, other: MatrixFq) -> None:
        if other.spec != self.spec:
            raise FieldMismatch("matrices over different fields")

    # -- arithmetic ----------------------------------------------------------------

    def __add__(self, other: MatrixFq) -> MatrixFq:
        self._check(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        add = self.spec.add_table
        return MatrixFq._raw(
            self.spec,
            [[add[a][b] for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)],
            self.ncols,
        )

    def __neg__(self) -> MatrixFq:
        neg = self.spec.neg_table
        return MatrixFq._raw(self.spec, [[neg[a] for a in r] for r in self._rows], self.ncols)

    def __sub__(self, other: MatrixFq) -> MatrixFq:
        return self + (-other)

    def __matmul__(self, other: MatrixFq) -> MatrixFq:
        self._check(other)
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        add, mul = self.spec.add_table, self.spec.mul_table
        cols = list(zip(*other._rows)) if other.nrows else [()] * other.ncols
        out = []
        for r in self._rows:
            row = []
            for c in cols:
                acc = 0
                for a, b in zip(r, c):
                    if a and b:
                        acc = add[acc][mul[a][b]]
                row.append(acc)
            out.append(row)
        return MatrixFq._raw(self.spec, out, other.ncols)

    def scale(self, c: FieldElement | int) -> MatrixFq:
        ci = _as_index(self.spec, c)
        mul = self.spec.mul_table[ci]
        return MatrixFq._raw(self.spec, [[mul[a] for a in r] for r in self._rows], self.ncols)

    def __rmul__(self, c):
        return self.scale(c)

    @property
    def T(self) -> MatrixFq:
        if not self.nrows:
            return MatrixFq._raw(self.spec, [[] for _ in range(self.ncols)], 0)
        return MatrixFq._raw(self.spec, zip(*self._rows), self.nrows)

    def transpose(self) -> MatrixFq:
        return self.T

    def conj(self) -> MatrixFq:
        c = self.spec.conj_table
        return MatrixFq._raw(self.spec, [[c[a] for a in r] for r in self._rows], self.ncols)

    def trace(self) -> MatrixFq:
        t = self.spec.trace_table
        return MatrixFq._raw(self.spec, [[t[a] for a in r] for r in self._rows], self.ncols)

    def hstack(self, *others: MatrixFq) -> MatrixFq:
        rows = [list(r) for r in self._rows]
        ncols = self.ncols
        for o in others:
            self._check(o)
            if o.nrows != self.nrows:
                raise ShapeMismatch("hstack needs equal row counts")
            for r, s in zip(rows, o._rows):
                r.extend(s)
            ncols += o.ncols
        return MatrixFq._raw(self.spec, rows, ncols)

    def vstack(self, *others: MatrixFq) -> MatrixFq:
        rows = list(self._rows)
        for o in others:
            self._check(o)
            if o.ncols != self.ncols:
                raise ShapeMismatch("vstack needs equal column counts")
            rows.extend(o._rows)
        return MatrixFq._raw(self.spec, rows, self.ncols)

    def submatrix(self, rows: Sequence[int] | slice, cols: Sequence[int] | slice) -> MatrixFq:
        ri = range(self.nrows)[rows] if isinstance(rows, slice) else rows
        ci = range(self.ncols)[cols] if isinstance(cols, slice) else cols
        return MatrixFq._raw(self.spec, [[self._rows[i][j] for j in ci] for i in ri], len(ci))

    def permute_columns(self, perm: Sequence[int]) -> MatrixFq:
        """Column j of the result is column ``perm[j]`` of self."""
        return self.submatrix(slice(None), list(perm))

    def vecmul(self, v: Sequence) -> tuple[FieldElement, ...]:
        """Row vector times matrix, ``v M``."""
        vi = _vec_index(self.spec, v)
        if len(vi) != self.nrows:
            raise ShapeMismatch(f"vector of length {len(vi)} against {self.shape}")
        out = _combine(self.spec, vi, self._rows, self.ncols)
        return tuple(FieldElement(self.spec, a) for a in out)

    # -- elimination ----------------------------------------------------------------

    def rref(self) -> tuple[MatrixFq, list[int]]:
        """Reduced row echelon form and pivot columns (zero rows dropped)."""
        rows, pivots = _rref(self.spec, [list(r) for r in self._rows], self.ncols)
        return MatrixFq._raw(self.spec, rows[: len(pivots)], self.ncols), pivots

    def rank(self) -> int:
        return len(_rref(self.spec, [list(r) for r in self._rows], self.ncols)[1])

    def det(self) -> FieldElement:
        if self.nrows != self.ncols:
            raise NonSquare(f"determinant of a {self.shape} matrix")
        return FieldElement(self.spec, _det(self.spec, [list(r) for r in self._rows]))

    def inverse(self) -> MatrixFq:
        if self.nrows != self.ncols:
            raise NonSquare(f"inverse of a {self.shape} matrix")
        n = self.nrows
        aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(self._rows)]
        rows, pivots = _rref(self.spec, aug, 2 * n)
        if pivots[:n] != list(range(n)):
            raise Singular("matrix is not invertible")
        return MatrixFq._raw(self.spec, [r[n:] for r in rows[:n]], n)

    def nullspace(self) -> MatrixFq:
        """Basis (as rows) of ``{x : M x^T = 0}``; its size is ``ncols - rank``."""
        return MatrixFq._raw(self.spec, right_kernel(self.spec, self._rows, self.ncols), self.ncols)

    def left_nullspace(self) -> MatrixFq:
        """Basis (as rows) of ``{u : u M = 0}``; its size is ``nrows - rank``."""
        return self.T.nullspace()

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._rows)


# ---------------------------------------------------------------------------
# index-level helpers shared with the code modules


def _combine(spec: FieldSpec, coeffs: Sequence[int], rows: Sequence[Sequence[int]], ncols: int) -> list[int]:
    add, mul = spec.add_table, spec.mul_table
    out = [0] * ncols
    for c, r in zip(coeffs, rows):
        if c:
            m = mul[c]
            out = [add[a][m[b]] for a, b in zip(out, r)]
    return out


def _rref(spec: FieldSpec, rows: Rows, ncols: int) -> tuple[Rows, list[int]]:
    """In-place reduced row echelon form; pivot = first nonzero in column order."""
    add, mul, inv, neg = spec.add_table, spec.mul_table, spec.inv_table, spec.neg_table
    pivots: list[int] = []
    lead = 0
    nrows = len(rows)
    for col in range(ncols):
        if lead == nrows:
            break
        pr = next((i for i in range(lead, nrows) if rows[i][col]), None)
        if pr is None:
            continue
        rows[lead], rows[pr] = rows[pr], rows[lead]
        s = mul[inv[rows[lead][col]]]
        prow = rows[lead] = [s[a] for a in rows[lead]]
        for i in range(nrows):
            if i != lead and rows[i][col]:
                f = mul[neg[rows[i][col]]]
                rows[i] = [add[a][f[b]] for a, b in zip(rows[i], prow)]
        pivots.append(col)
        lead += 1
    return rows, pivots


def _det(spec: FieldSpec, rows: Rows) -> int:
    add, mul, inv, neg = spec.add_table, spec.mul_table, spec.inv_table, spec.neg_table
    n = len(rows)
    det = 1
    for col in range(n):
        pr = next((i for i in range(col, n) if rows[i][col]), None)
        if pr is None:
            return 0
        if pr != col:
            rows[col], rows[pr] = rows[pr], rows[col]
            det = neg[det]
        piv = rows[col][col]
        det = mul[det][piv]
        s = inv[piv]
        for i in range(col + 1, n):
            if rows[i][col]:
                f = mul[neg[mul[rows[i][col]][s]]]
                rows[i] = [add[a][f[b]] for a, b in zip(rows[i], rows[col])]
    return det


def right_kernel(spec: FieldSpec, rows: Sequence[Sequence[int]], ncols: int) -> Rows:
    """Basis of ``{x : M x^T = 0}`` for M given by ``rows`` with ``ncols`` columns."""
    red, pivots = _rref(spec, [list(r) for r in rows], ncols)
    neg = spec.neg_table
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for i, pc in enumerate(pivots):
            x[pc] = neg[red[i][f]]
        basis.append(x)
    return basis


def row_space_basis(spec: FieldSpec, rows: Sequence[Sequence[int]], ncols: int) -> Rows:
    red, pivots = _rref(spec, [list(r) for r in rows], ncols)
    return red[: len(pivots)]


def rank_of(spec: FieldSpec, rows: Sequence[Sequence[int]], ncols: int) -> int:
    return len(_rref(spec, [list(r) for r in rows], ncols)[1])


def intersect_row_spaces(spec: FieldSpec, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], ncols: int) -> Rows:
    """Basis of rowspace(a) ∩ rowspace(b) via the left kernel of [a; b]."""
    a = row_space_basis(spec, a, ncols)
    b = row_space_basis(spec, b, ncols)
    if not a or not b:
        return []
    stacked = [list(r) for r in a] + [list(r) for r in b]
    # columns of the stacked matrix become rows of its transpose
    kernel = right_kernel(spec, [list(c) for c in zip(*stacked)], len(stacked))
    vecs = [_combine(spec, x[: len(a)], a, ncols) for x in kernel]
    return row_space_basis(spec, vecs, ncols)


# ---------------------------------------------------------------------------
# coordinates over F_r in the basis {1, w}


def _omega_coords(spec: FieldSpec) -> tuple[list[int], list[int]]:
    """Tables x -> (a, b) with x = a + b w and a, b in F_r."""
    add, mul, neg, conj, inv = spec.add_table, spec.mul_table, spec.neg_table, spec.conj_table, spec.inv_table
    w = spec.omega_index
    d_inv = inv[add[w][neg[conj[w]]]]  # 1 / (w - conj(w))
    aa, bb = [], []
    for x in range(spec.q):
        b = mul[add[x][neg[conj[x]]]][d_inv]
        aa.append(add[x][neg[mul[b][w]]])
        bb.append(b)
    return aa, bb


_COORD_CACHE: dict[FieldSpec, tuple[list[int], list[int]]] = {}


def omega_coords(spec: FieldSpec) -> tuple[list[int], list[int]]:
    tabs = _COORD_CACHE.get(spec)
    if tabs is None:
        tabs = _COORD_CACHE.setdefault(spec, _omega_coords(spec))
    return tabs


def expand_vector(spec: FieldSpec, v: Sequence[int]) -> list[int]:
    aa, bb = omega_coords(spec)
    out = []
    for x in v:
        out.append(aa[x])
        out.append(bb[x])
    return out


def contract_vector(spec: FieldSpec, coords: Sequence[int]) -> list[int]:
    add, mul, w = spec.add_table, spec.mul_table, spec.omega_index
    return [add[coords[2 * j]][mul[coords[2 * j + 1]][w]] for j in range(len(coords) // 2)]


def expand_to_base(M: MatrixFq) -> MatrixFq:
    """Replace each entry ``a + b w`` (a, b in F_r) by the column pair (a, b).

    The result is an ``m x 2n`` matrix whose entries lie in the subfield F_r
    (still represented inside F_q); its rank equals the F_r-row-rank of M.
    """
    return MatrixFq._raw(M.spec, [expand_vector(M.spec, r) for r in M.indices], 2 * M.ncols)


def contract_from_base(M: MatrixFq) -> MatrixFq:
    """Inverse of :func:`expand_to_base`."""
    if M.ncols % 2:
        raise ShapeMismatch("expanded matrices have an even number of columns")
    return MatrixFq._raw(M.spec, [contract_vector(M.spec, r) for r in M.indices], M.ncols // 2)


def conj_matrix(M: MatrixFq) -> MatrixFq:
    return M.conj()


def trace_matrix(M: MatrixFq) -> MatrixFq:
    return M.trace()


def rank(M: MatrixFq) -> int:
    return M.rank()


def det(M: MatrixFq) -> FieldElement:
    return M.det()


def inverse(M: MatrixFq) -> MatrixFq:
    return M.inverse()


def nullspace(M: MatrixFq) -> MatrixFq:
    return M.nullspace()
