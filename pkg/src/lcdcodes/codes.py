"""Linear and subfield-linear codes, inner products, duals and hulls.

A :class:`LinearCode` is an F_q-subspace given by a full-rank generator
matrix. A :class:`SubfieldLinearCode` is an F_r-subspace of F_q^n given by
F_r-independent generator rows; its F_r-dimension is written ``ell``.

The hull routines here compute ``C ∩ C^⊥`` straight from the definition of the
dual, so they serve as ground truth for the Gram-matrix criteria in
:mod:`lcdcodes.lcd`.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from lcdcodes.errors import (
    CategoryMismatch,
    InvalidAlpha,
    LengthMismatch,
    MissingAlpha,
    RankDeficient,
    TooLarge,
    TrivialCode,
)
from lcdcodes.field import FieldElement, FieldSpec, find_alpha
from lcdcodes.matrix import (
    MatrixFq,
    _combine,
    contract_vector,
    expand_vector,
    intersect_row_spaces,
    rank_of,
    right_kernel,
    row_space_basis,
)

DEFAULT_LIMIT = 2**24

EUCLIDEAN = "euclidean"
HERMITIAN = "hermitian"
TRACE_HERMITIAN = "trace-hermitian"


@dataclass(frozen=True)
class InnerProductKind:
    """Which inner product to use; ``alpha`` only matters for trace-Hermitian over odd q."""

    name: str
    alpha: FieldElement | None = None

    def __post_init__(self):
        if self.name not in (EUCLIDEAN, HERMITIAN, TRACE_HERMITIAN):
            raise ValueError(f"unknown inner product {self.name!r}")
        if self.alpha is not None:
            a = self.alpha
            if not a or a.conj() != -a:
                raise InvalidAlpha(f"alpha = {a} must be nonzero with conj(alpha) = -alpha")

    @classmethod
    def euclidean(cls) -> InnerProductKind:
        return cls(EUCLIDEAN)

    @classmethod
    def hermitian(cls) -> InnerProductKind:
        return cls(HERMITIAN)

    @classmethod
    def trace_hermitian(cls, spec: FieldSpec | None = None, alpha: FieldElement | None = None):
        """Trace-Hermitian product; with ``spec`` given and q odd, alpha defaults to find_alpha."""
        if alpha is None and spec is not None and spec.odd:
            alpha = find_alpha(spec)
        return cls(TRACE_HERMITIAN, alpha)

    def resolved(self, spec: FieldSpec) -> InnerProductKind:
        if self.name == TRACE_HERMITIAN and spec.odd and self.alpha is None:
            return InnerProductKind(TRACE_HERMITIAN, find_alpha(spec))
        return self

    def trace_scalar(self, spec: FieldSpec) -> int:
        """Index of the factor inside the trace: 1 for even q, alpha for odd q."""
        if not spec.odd:
            return 1
        if self.alpha is None:
            raise MissingAlpha("trace-Hermitian product over odd q needs alpha")
        return self.alpha.value


def _kind(kind: InnerProductKind | str) -> InnerProductKind:
    return kind if isinstance(kind, InnerProductKind) else InnerProductKind(kind)


def _indices(spec: FieldSpec, v: Sequence) -> list[int]:
    out = []
    for x in v:
        if isinstance(x, FieldElement):
            out.append(x.value)
        else:
            out.append(int(x) % spec.p)
    return out


def _hermitian_idx(spec: FieldSpec, u: Sequence[int], v: Sequence[int]) -> int:
    add, mul, conj = spec.add_table, spec.mul_table, spec.conj_table
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = add[acc][mul[a][conj[b]]]
    return acc


def _euclidean_idx(spec: FieldSpec, u: Sequence[int], v: Sequence[int]) -> int:
    add, mul = spec.add_table, spec.mul_table
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = add[acc][mul[a][b]]
    return acc


def _inner_idx(spec: FieldSpec, u, v, kind: InnerProductKind) -> int:
    if kind.name == EUCLIDEAN:
        return _euclidean_idx(spec, u, v)
    h = _hermitian_idx(spec, u, v)
    if kind.name == HERMITIAN:
        return h
    return spec.trace_table[spec.mul_table[kind.trace_scalar(spec)][h]]


def inner_product(u: Sequence[FieldElement], v: Sequence[FieldElement], kind: InnerProductKind | str) -> FieldElement:
    """Euclidean ``Σ u_i v_i``, Hermitian ``Σ u_i conj(v_i)`` or trace-Hermitian.

    The trace-Hermitian value is ``Tr(<u, v>_H)`` for even q and
    ``Tr(alpha <u, v>_H)`` for odd q, so it always lies in F_r.
    """
    kind = _kind(kind)
    if len(u) != len(v):
        raise LengthMismatch(f"vectors of length {len(u)} and {len(v)}")
    if not u:
        raise LengthMismatch("inner product of empty vectors has no field")
    spec = next(x.field for x in itertools.chain(u, v) if isinstance(x, FieldElement))
    return FieldElement(spec, _inner_idx(spec, _indices(spec, u), _indices(spec, v), kind))


def hamming_weight(v: Sequence) -> int:
    return sum(1 for x in v if x)


def hamming_distance(u: Sequence, v: Sequence) -> int:
    if len(u) != len(v):
        raise LengthMismatch(f"vectors of length {len(u)} and {len(v)}")
    return sum(1 for a, b in zip(u, v) if a != b)


# ---------------------------------------------------------------------------


class _Code:
    generator: MatrixFq

    @property
    def spec(self) -> FieldSpec:
        return self.generator.spec

    @property
    def n(self) -> int:
        return self.generator.ncols

    @property
    def G(self) -> MatrixFq:
        return self.generator

    def _scalars(self) -> Sequence[int]:
        raise NotImplementedError

    @property
    def size(self) -> int:
        return len(self._scalars()) ** self.generator.nrows

    def codewords(self, limit: int = DEFAULT_LIMIT) -> Iterator[tuple[FieldElement, ...]]:
        spec = self.spec
        for w in self._codeword_indices(limit):
            yield tuple(FieldElement(spec, a) for a in w)

    def _codeword_indices(self, limit: int = DEFAULT_LIMIT) -> Iterator[list[int]]:
        if self.size > limit:
            raise TooLarge(f"code has {self.size} codewords, limit is {limit}")
        spec = self.spec
        add, mul = spec.add_table, spec.mul_table
        scalars = self._scalars()
        rows = self.generator.indices
        scaled = [[[mul[c][x] for x in row] for c in scalars] for row in rows]
        depth = len(rows)

        def rec(i: int, acc: list[int]) -> Iterator[list[int]]:
            if i == depth:
                yield acc
                return
            for sr in scaled[i]:
                yield from rec(i + 1, [add[a][b] for a, b in zip(acc, sr)])

        return rec(0, [0] * self.n)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, rows={self.generator.nrows}, F_{self.spec.q})"


class LinearCode(_Code):
    """An [n, k]_q F_q-linear code from a full-rank ``k x n`` generator."""

    def __init__(self, generator: MatrixFq):
        if generator.rank() != generator.nrows:
            raise RankDeficient(f"generator rank {generator.rank()} < {generator.nrows} rows")
        self.generator = generator

    @classmethod
    def canonicalize(cls, generator: MatrixFq) -> LinearCode:
        """Row-reduce and drop dependent rows."""
        return cls(generator.rref()[0])

    @property
    def k(self) -> int:
        return self.generator.nrows

    def _scalars(self):
        return range(self.spec.q)

    def contains(self, v: Sequence) -> bool:
        rows = list(self.generator.indices)
        vi = _indices(self.spec, v)
        return rank_of(self.spec, rows + [vi], self.n) == self.k

    def to_subfield(self) -> SubfieldLinearCode:
        """The same set viewed as an F_r-linear code with rows ``[G; wG]``."""
        G = self.generator
        return SubfieldLinearCode(G.vstack(G.scale(self.spec.omega)))


class SubfieldLinearCode(_Code):
    """An (n, r^ell)_q F_r-linear code from ``ell`` F_r-independent rows."""

    def __init__(self, generator: MatrixFq):
        spec = generator.spec
        if rank_of(spec, [expand_vector(spec, r) for r in generator.indices], 2 * generator.ncols) != generator.nrows:
            raise RankDeficient("generator rows are not F_r-linearly independent")
        self.generator = generator

    @classmethod
    def canonicalize(cls, generator: MatrixFq) -> SubfieldLinearCode:
        spec = generator.spec
        coords = row_space_basis(spec, [expand_vector(spec, r) for r in generator.indices], 2 * generator.ncols)
        return cls(MatrixFq._raw(spec, [contract_vector(spec, c) for c in coords], generator.ncols))

    @property
    def ell(self) -> int:
        return self.generator.nrows

    def _scalars(self):
        return self.spec.subfield_indices

    def contains(self, v: Sequence) -> bool:
        spec = self.spec
        rows = [expand_vector(spec, r) for r in self.generator.indices]
        rows.append(expand_vector(spec, _indices(spec, v)))
        return rank_of(spec, rows, 2 * self.n) == self.ell

    def base_matrix(self) -> list[list[int]]:
        """Generator rows in F_r coordinates (basis {1, w} per position)."""
        return [expand_vector(self.spec, r) for r in self.generator.indices]


AnyCode = LinearCode | SubfieldLinearCode


def as_subfield(C: AnyCode) -> SubfieldLinearCode:
    return C.to_subfield() if isinstance(C, LinearCode) else C


def same_code(A: AnyCode, B: AnyCode) -> bool:
    """Equality of the underlying sets, tested as mutual row-space containment over F_r."""
    if A.n != B.n or A.spec != B.spec:
        return False
    a, b = as_subfield(A), as_subfield(B)
    spec = a.spec
    ra, rb = a.base_matrix(), b.base_matrix()
    both = rank_of(spec, ra + rb, 2 * a.n)
    return both == len(ra) == len(rb)


def enumerate_codewords(C: AnyCode, limit: int = DEFAULT_LIMIT) -> Iterator[tuple[FieldElement, ...]]:
    """All codewords once each, messages in ``itertools.product`` order."""
    return C.codewords(limit)


def min_distance(C: AnyCode, limit: int = DEFAULT_LIMIT) -> int:
    """Minimum nonzero weight; equals the minimum distance since codes are additive groups."""
    if C.size == 1:
        raise TrivialCode("minimum distance of a one-word code is undefined")
    best = C.n
    for w in C._codeword_indices(limit):
        wt = sum(1 for a in w if a)
        if 0 < wt < best:
            best = wt
            if best == 1:
                break
    return best


def min_distance_pairwise(C: AnyCode, limit: int = 256) -> int:
    """Pairwise minimum of d(u, v) over distinct codewords; an oracle for tiny codes."""
    if C.size == 1:
        raise TrivialCode("minimum distance of a one-word code is undefined")
    words = list(C._codeword_indices(limit))
    return min(
        sum(1 for a, b in zip(u, v) if a != b) for u, v in itertools.combinations(words, 2)
    )


# ---------------------------------------------------------------------------
# duals


def _trace_hermitian_conditions(C: SubfieldLinearCode, kind: InnerProductKind) -> list[list[int]]:
    """The 2n x ell matrix over F_r sending F_r-coordinates of u to (<u, g_i>_TrH)_i."""
    spec = C.spec
    s = kind.trace_scalar(spec)
    mul, conj, tr = spec.mul_table, spec.conj_table, spec.trace_table
    basis = (1, spec.omega_index)
    G = C.generator.indices
    rows = []
    for j in range(C.n):
        for beta in basis:
            sb = mul[s][beta]
            rows.append([tr[mul[sb][conj[g[j]]]] for g in G])
    return rows


def dual(C: AnyCode, kind: InnerProductKind | str) -> AnyCode:
    """Dual code under the given inner product.

    Euclidean and Hermitian duals are F_q-linear codes (left kernels of G^T and
    conj(G)^T). The trace-Hermitian dual is an F_r-linear code of F_r-dimension
    ``2n - ell``; an F_q-linear input is first viewed through rows ``[G; wG]``.
    """
    kind = _kind(kind).resolved(C.spec)
    spec, n = C.spec, C.n
    if kind.name in (EUCLIDEAN, HERMITIAN):
        M = C.generator if kind.name == EUCLIDEAN else C.generator.conj()
        # u M^T = 0  <=>  M u^T = 0
        basis = right_kernel(spec, M.indices, n)
        return LinearCode(MatrixFq._raw(spec, basis, n))
    S = as_subfield(C)
    cond = _trace_hermitian_conditions(S, kind)
    coords = right_kernel(spec, [list(c) for c in zip(*cond)], 2 * n) if cond else _unit_rows(2 * n)
    return SubfieldLinearCode(MatrixFq._raw(spec, [contract_vector(spec, x) for x in coords], n))


def _unit_rows(m: int) -> list[list[int]]:
    return [[int(i == j) for j in range(m)] for i in range(m)]


def hull_oracle(C: AnyCode, kind: InnerProductKind | str) -> MatrixFq:
    """Basis of ``C ∩ C^⊥`` from exact linear algebra on the definition.

    Over F_q for Euclidean/Hermitian, over F_r (via coordinates in {1, w}) for
    trace-Hermitian. An empty basis means the code is complementary dual.
    """
    kind = _kind(kind).resolved(C.spec)
    spec, n = C.spec, C.n
    D = dual(C, kind)
    if kind.name == TRACE_HERMITIAN:
        a = as_subfield(C).base_matrix()
        b = D.base_matrix()
        inter = intersect_row_spaces(spec, a, b, 2 * n)
        return MatrixFq._raw(spec, [contract_vector(spec, x) for x in inter], n)
    if isinstance(C, SubfieldLinearCode):
        raise CategoryMismatch("Euclidean/Hermitian hulls are for F_q-linear codes")
    inter = intersect_row_spaces(spec, C.generator.indices, D.generator.indices, n)
    return MatrixFq._raw(spec, inter, n)


def hull_brute_force(C: AnyCode, kind: InnerProductKind | str, limit: int = 1 << 16) -> list[tuple[FieldElement, ...]]:
    """Every nonzero codeword orthogonal to all generator rows, by enumeration.

    Checking against the generators suffices because each product is additive
    in its second argument and compatible with the scalars of the code.
    """
    kind = _kind(kind).resolved(C.spec)
    spec = C.spec
    if kind.name != TRACE_HERMITIAN and isinstance(C, SubfieldLinearCode):
        raise CategoryMismatch("Euclidean/Hermitian hulls are for F_q-linear codes")
    G = C.generator.indices
    out = []
    for w in C._codeword_indices(limit):
        if any(w) and all(_inner_idx(spec, w, g, kind) == 0 for g in G):
            out.append(tuple(FieldElement(spec, a) for a in w))
    return out


def codeword(C: AnyCode, message: Sequence) -> tuple[FieldElement, ...]:
    """``u G`` for a message u (entries in F_q, or F_r for subfield codes)."""
    spec = C.spec
    u = _indices(spec, message)
    if len(u) != C.generator.nrows:
        raise LengthMismatch(f"message of length {len(u)} for {C.generator.nrows} rows")
    return tuple(FieldElement(spec, a) for a in _combine(spec, u, C.generator.indices, C.n))
