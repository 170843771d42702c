"""Complementary-dual criteria and the associated orthogonal projections.

Hermitian: a linear code with generator G is LCD iff ``G conj(G)^T`` is
invertible, and then ``P = conj(G)^T (G conj(G)^T)^{-1} G`` projects row
vectors onto C along C^⊥H.

Trace-Hermitian: an F_r-linear code is LCD iff
``Δ = G conj(G)^T - conj(G) G^T`` is invertible. The projection onto C is only
F_r-linear, so it is exposed as a callable rather than an F_q matrix.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

from lcdcodes.codes import (
    TRACE_HERMITIAN,
    AnyCode,
    InnerProductKind,
    LinearCode,
    _indices,
    _inner_idx,
    _kind,
    as_subfield,
    dual,
)
from lcdcodes.errors import NotLCD, Singular
from lcdcodes.field import FieldElement
from lcdcodes.matrix import (
    MatrixFq,
    _combine,
    contract_vector,
    expand_vector,
    right_kernel,
    row_space_basis,
)

Vector = tuple[FieldElement, ...]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a Gram-type criterion, with the matrix that decided it."""

    lcd: bool
    matrix: MatrixFq
    det: FieldElement

    def __bool__(self) -> bool:
        return self.lcd


def hermitian_gram(C: LinearCode) -> MatrixFq:
    G = C.generator
    return G @ G.conj().T


def hermitian_lcd_check(C: LinearCode) -> Verdict:
    gram = hermitian_gram(C)
    d = gram.det()
    return Verdict(bool(d), gram, d)


def is_hermitian_lcd(C: LinearCode) -> bool:
    return hermitian_lcd_check(C).lcd


def hermitian_projection(C: LinearCode) -> MatrixFq:
    """``conj(G)^T (G conj(G)^T)^{-1} G``, acting as ``v -> v P``."""
    G = C.generator
    try:
        inv = hermitian_gram(C).inverse()
    except Singular:
        raise NotLCD("G conj(G)^T is singular; the code is not Hermitian LCD") from None
    return G.conj().T @ inv @ G


def trace_delta(C: AnyCode) -> MatrixFq:
    """``G conj(G)^T - conj(G) G^T`` for the F_r-generator of C."""
    G = as_subfield(C).generator
    M = G @ G.conj().T
    return M - M.conj()


def trace_hermitian_lcd_check(C: AnyCode) -> Verdict:
    delta = trace_delta(C)
    d = delta.det()
    return Verdict(bool(d), delta, d)


def is_trace_hermitian_lcd(C: AnyCode) -> bool:
    return trace_hermitian_lcd_check(C).lcd


class TraceHermitianProjection:
    """The map ``v -> s^{-1} Tr(s v conj(G)^T) Δ^{-1} G`` with s = 1 (even q) or alpha (odd q).

    For odd q, alpha defaults to :func:`lcdcodes.field.find_alpha`; the map does
    not depend on that choice.
    """

    def __init__(self, C: AnyCode, alpha: FieldElement | None = None):
        S = as_subfield(C)
        spec = S.spec
        kind = InnerProductKind.trace_hermitian(spec, alpha)
        try:
            inv = trace_delta(S).inverse()
        except Singular:
            raise NotLCD("Δ is singular; the code is not trace-Hermitian LCD") from None
        self.code = S
        self.alpha = kind.alpha
        self._s = kind.trace_scalar(spec)
        self._s_inv = spec.inv_table[self._s]
        self._gbar = S.generator.conj().indices
        # Δ^{-1} G, precomputed: an ell x n matrix
        self._inv_g = (inv @ S.generator).indices

    def _apply(self, v: Sequence[int]) -> list[int]:
        spec = self.code.spec
        mul, tr = spec.mul_table, spec.trace_table
        s, s_inv = mul[self._s], mul[self._s_inv]
        coeffs = []
        for gb in self._gbar:
            h = 0
            for a, b in zip(v, gb):
                if a and b:
                    h = spec.add_table[h][mul[a][b]]
            coeffs.append(s_inv[tr[s[h]]])
        return _combine(spec, coeffs, self._inv_g, self.code.n)

    def __call__(self, v: Sequence) -> Vector:
        spec = self.code.spec
        vi = _indices(spec, v)
        if len(vi) != self.code.n:
            raise ValueError(f"vector of length {len(vi)} for a code of length {self.code.n}")
        return tuple(FieldElement(spec, a) for a in self._apply(vi))


def trace_hermitian_projection(C: AnyCode, v: Sequence, alpha: FieldElement | None = None) -> Vector:
    return TraceHermitianProjection(C, alpha)(v)


# ---------------------------------------------------------------------------
# projection verification


@dataclass
class ProjectionReport:
    idempotent: bool = True
    fixes_code: bool = True
    kills_dual: bool = True
    image_kernel_orthogonal: bool = True
    witness: Vector | None = None
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.idempotent and self.fixes_code and self.kills_dual and self.image_kernel_orthogonal

    def _fail(self, flag: str, v) -> None:
        setattr(self, flag, False)
        self.failures.append(flag)
        if self.witness is None:
            self.witness = tuple(v)


def matrix_map(P: MatrixFq) -> Callable[[Sequence], Vector]:
    """Wrap a matrix as the row-vector map ``v -> v P``."""
    return P.vecmul


def verify_projection(T: Callable[[Sequence], Sequence], C: AnyCode, kind: InnerProductKind | str) -> ProjectionReport:
    """Check that T is an orthogonal projection onto C under ``kind``.

    T is assumed linear over the scalars of the inner product (F_q for
    Euclidean/Hermitian, F_r for trace-Hermitian). Under that assumption every
    check on a spanning set is complete: idempotence on a basis of the ambient
    space, ``T(c) = c`` on a basis of C, ``T(u) = 0`` on a basis of the dual,
    and ``<x, y> = 0`` for x in a basis of Im T and y in a basis of ker T.
    """
    kind = _kind(kind).resolved(C.spec)
    spec, n = C.spec, C.n
    report = ProjectionReport()
    trace_kind = kind.name == TRACE_HERMITIAN

    def ev(v: Sequence[int]) -> list[int]:
        return _indices(spec, T(tuple(FieldElement(spec, a) for a in v)))

    def el(v):
        return tuple(FieldElement(spec, a) for a in v)

    # ambient basis: e_j over F_q, or {e_j, w e_j} over F_r
    scalars = (1, spec.omega_index) if trace_kind else (1,)
    ambient = []
    for j in range(n):
        for s in scalars:
            e = [0] * n
            e[j] = s
            ambient.append(e)

    images = [ev(e) for e in ambient]
    for e, te in zip(ambient, images):
        if ev(te) != te:
            report._fail("idempotent", el(e))
            break

    code_basis = as_subfield(C).generator.indices if trace_kind else C.generator.indices
    for c in code_basis:
        if ev(c) != list(c):
            report._fail("fixes_code", el(c))
            break

    D = dual(C, kind)
    for u in D.generator.indices:
        if any(ev(u)):
            report._fail("kills_dual", el(u))
            break

    # image and kernel bases from the matrix of T on the ambient basis
    if trace_kind:
        coords = [expand_vector(spec, t) for t in images]
        img = [contract_vector(spec, x) for x in row_space_basis(spec, coords, 2 * n)]
        kcoef = right_kernel(spec, [list(c) for c in zip(*coords)], len(ambient)) if n else []
    else:
        img = row_space_basis(spec, images, n)
        kcoef = right_kernel(spec, [list(c) for c in zip(*images)], len(ambient)) if n else []
    ker = [_combine(spec, x, ambient, n) for x in kcoef]
    for x in img:
        bad = next((y for y in ker if _inner_idx(spec, x, y, kind) != 0), None)
        if bad is not None:
            report._fail("image_kernel_orthogonal", el(bad))
            break
    return report


def hermitian_report(C: LinearCode) -> ProjectionReport:
    return verify_projection(matrix_map(hermitian_projection(C)), C, InnerProductKind.hermitian())


def trace_hermitian_report(C: AnyCode, alpha: FieldElement | None = None) -> ProjectionReport:
    proj = TraceHermitianProjection(C, alpha)
    return verify_projection(proj, C, InnerProductKind.trace_hermitian(C.spec, alpha))

