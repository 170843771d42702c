"""Standard forms and LCD constructions.

Linear codes are brought to ``[I_k | P]`` and extended to ``[I_k | P | P]``
(characteristic 2) or ``[I_k | P | λP]`` with ``λ^2 = λ^(r+1) = -1``; both
have Gram matrix exactly ``I_k``.

Subfield-linear codes are brought to the block form::

    [ I_k   A ]
    [ wI_k  wA ]
    [ 0     B ]

and extended to ``[I A A 0; wI wA wA 0; 0 B B B]`` (characteristic 2) or
``[I A λA 0; wI wA λwA 0; 0 B λB B]``, which are trace-Hermitian LCD whenever
``B conj(B)^T - conj(B) B^T`` is invertible.
"""

from __future__ import annotations

from dataclasses import dataclass

from lcdcodes.codes import AnyCode, LinearCode, SubfieldLinearCode, as_subfield
from lcdcodes.errors import (
    BBlockSingular,
    CategoryMismatch,
    NotStandardForm,
    OmegaTraceZero,
    WrongCharacteristic,
)
from lcdcodes.field import FieldElement, sqrt_minus_one
from lcdcodes.matrix import (
    MatrixFq,
    contract_vector,
    expand_vector,
    intersect_row_spaces,
    row_space_basis,
)


@dataclass(frozen=True)
class StandardFormLinear:
    """``code`` has generator ``[I_k | P]``; column j of it is column ``perm[j]`` of the input."""

    code: LinearCode
    column_permutation: tuple[int, ...]
    P: MatrixFq

    @property
    def k(self) -> int:
        return self.code.k

    @property
    def n(self) -> int:
        return self.code.n


@dataclass(frozen=True)
class StandardFormSubfield:
    """``code`` has generator ``[I_k A; wI_k wA; 0 B]``.

    ``preserved`` is true when the input generator already had that shape and
    was kept verbatim.
    """

    code: SubfieldLinearCode
    k: int
    A: MatrixFq
    B: MatrixFq
    column_permutation: tuple[int, ...]
    preserved: bool = False

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def ell(self) -> int:
        return self.code.ell


def _is_identity_block(G: MatrixFq, k: int) -> bool:
    return all(G.indices[i][j] == int(i == j) for i in range(k) for j in range(k))


def standard_form_linear(C: LinearCode) -> StandardFormLinear:
    """Row-reduce and move pivot columns to the front."""
    G = C.generator
    k, n = G.nrows, G.ncols
    if _is_identity_block(G, k):
        perm = tuple(range(n))
        std = G
    else:
        red, pivots = G.rref()
        perm = tuple(pivots + [j for j in range(n) if j not in pivots])
        std = red.permute_columns(perm)
    return StandardFormLinear(LinearCode(std), perm, std.submatrix(slice(None), slice(k, n)))


def is_block_form(G: MatrixFq, k: int) -> bool:
    """Whether G has the shape ``[I_k A; wI_k wA; 0 B]`` for this k."""
    ell, n = G.nrows, G.ncols
    if k < 0 or 2 * k > ell or k > n:
        return False
    rows = G.indices
    if not _is_identity_block(G, k):
        return False
    mul_w = G.spec.mul_table[G.spec.omega_index]
    for i in range(k):
        if list(rows[k + i]) != [mul_w[a] for a in rows[i]]:
            return False
    return all(rows[i][j] == 0 for i in range(2 * k, ell) for j in range(k))


def _block_parts(G: MatrixFq, k: int) -> tuple[MatrixFq, MatrixFq]:
    ell, n = G.nrows, G.ncols
    A = G.submatrix(range(k), range(k, n))
    B = G.submatrix(range(2 * k, ell), range(k, n))
    return A, B


def standard_form_subfield(C: AnyCode, keep_existing: bool = True) -> StandardFormSubfield:
    """Equivalent generator in block form, using F_r row operations and a column permutation.

    If ``keep_existing`` and the generator already has the block shape for some
    k >= 1, it is returned unchanged (largest such k), and so is a generator
    whose code has no nonzero F_q-linear subspace (k = 0, B = G). Otherwise the F_q-linear
    part ``D = C ∩ w^{-1} C`` is split off: its reduced echelon rows give
    ``[I_k A]``, and a complement that vanishes on the pivot columns gives
    ``[0 B]``. Here k = dim_{F_q} D, the largest possible value.
    """
    S = as_subfield(C)
    G = S.generator
    spec, ell, n = S.spec, S.ell, S.n
    if keep_existing:
        for k in range(ell // 2, 0, -1):
            if is_block_form(G, k):
                A, B = _block_parts(G, k)
                return StandardFormSubfield(S, k, A, B, tuple(range(n)), preserved=True)

    base = S.base_matrix()
    w_inv = spec.inv_table[spec.omega_index]
    shifted = [expand_vector(spec, [spec.mul_table[w_inv][a] for a in r]) for r in G.indices]
    d_coords = intersect_row_spaces(spec, base, shifted, 2 * n)
    if d_coords:
        D = MatrixFq._raw(spec, [contract_vector(spec, x) for x in d_coords], n)
        D, pivots = D.rref()
    else:
        D, pivots = MatrixFq.zeros(spec, 0, n), []
    k = len(pivots)
    if k == 0 and keep_existing:
        # no F_q-linear part: the input is already [0 B] with B = G
        return StandardFormSubfield(S, 0, MatrixFq.zeros(spec, 0, n), G, tuple(range(n)), preserved=True)

    add, mul, neg = spec.add_table, spec.mul_table, spec.neg_table
    rest = []
    for g in G.indices:
        g = list(g)
        for d, p in zip(D.indices, pivots):
            c = g[p]
            if c:
                f = mul[neg[c]]
                g = [add[a][f[b]] for a, b in zip(g, d)]
        rest.append(expand_vector(spec, g))
    E = [contract_vector(spec, x) for x in row_space_basis(spec, rest, 2 * n)]

    perm = tuple(pivots + [j for j in range(n) if j not in pivots])
    wD = D.scale(spec.omega)
    full = D.vstack(wD, MatrixFq._raw(spec, E, n)).permute_columns(perm)
    if not is_block_form(full, k) or full.nrows != ell:  # pragma: no cover - internal consistency
        raise NotStandardForm("block form reduction failed")
    A, B = _block_parts(full, k)
    return StandardFormSubfield(SubfieldLinearCode(full), k, A, B, perm)


def subfield_standard_form_from_blocks(A: MatrixFq, B: MatrixFq) -> StandardFormSubfield:
    """Assemble ``[I A; wI wA; 0 B]`` from its blocks."""
    spec = A.spec
    k, m = A.nrows, A.ncols
    if B.ncols != m:
        raise NotStandardForm("A and B need the same number of columns")
    I = MatrixFq.identity(spec, k)
    top = I.hstack(A)
    bottom = MatrixFq.zeros(spec, B.nrows, k).hstack(B)
    G = top.vstack(top.scale(spec.omega), bottom)
    return StandardFormSubfield(SubfieldLinearCode(G), k, A, B, tuple(range(k + m)), preserved=True)


# ---------------------------------------------------------------------------
# Hermitian constructions


def construct_hermitian_even(sf: StandardFormLinear) -> LinearCode:
    """``[I_k | P | P]`` in characteristic 2: a [2n-k, k, d' >= d] Hermitian LCD code."""
    spec = sf.code.spec
    if spec.p != 2:
        raise WrongCharacteristic(f"needs characteristic 2, got {spec.p}")
    I = MatrixFq.identity(spec, sf.k)
    return LinearCode(I.hstack(sf.P, sf.P))


def construct_hermitian_odd(sf: StandardFormLinear, lam: FieldElement | None = None) -> LinearCode:
    """``[I_k | P | λP]`` for r = 1 (mod 4), λ from :func:`sqrt_minus_one` by default."""
    spec = sf.code.spec
    if lam is None:
        lam = sqrt_minus_one(spec)
    _check_lambda(lam)
    I = MatrixFq.identity(spec, sf.k)
    return LinearCode(I.hstack(sf.P, sf.P.scale(lam)))


def _check_lambda(lam: FieldElement) -> None:
    spec = lam.field
    if lam * lam != -spec.one or lam ** (spec.r + 1) != -spec.one:
        raise ValueError(f"λ = {lam} must satisfy λ^2 = λ^(r+1) = -1")


# ---------------------------------------------------------------------------
# trace-Hermitian constructions


def b_block_delta(B: MatrixFq) -> MatrixFq:
    M = B @ B.conj().T
    return M - M.conj()


def _check_b_block(B: MatrixFq) -> None:
    if not b_block_delta(B).det():
        raise BBlockSingular("B conj(B)^T - conj(B) B^T is singular")


def _trace_blocks(sf: StandardFormSubfield, c: FieldElement) -> SubfieldLinearCode:
    spec = sf.code.spec
    k, A, B = sf.k, sf.A, sf.B
    m = A.ncols
    w = spec.omega
    I = MatrixFq.identity(spec, k)
    Z = MatrixFq.zeros(spec, k, m)
    top = I.hstack(A, A.scale(c), Z)
    mid = I.scale(w).hstack(A.scale(w), A.scale(c * w), Z)
    bot = MatrixFq.zeros(spec, B.nrows, k).hstack(B, B.scale(c), B)
    return SubfieldLinearCode(top.vstack(mid, bot))


def construct_trace_hermitian_even(sf: StandardFormSubfield, strict: bool = True) -> SubfieldLinearCode:
    """``[I A A 0; wI wA wA 0; 0 B B B]``: a (3n-2k, r^ell, d' >= d) trace-Hermitian LCD code.

    With ``strict=False`` the B-block hypothesis is not checked and the output
    carries no LCD guarantee.
    """
    spec = sf.code.spec
    if spec.p != 2:
        raise WrongCharacteristic(f"needs characteristic 2, got {spec.p}")
    if strict:
        _check_b_block(sf.B)
    # unreachable for a valid modulus (w is never in F_r), kept as a guard
    if sf.k and not spec.omega.trace():
        raise OmegaTraceZero("Tr(w) = 0 makes the paired block singular")
    return _trace_blocks(sf, spec.one)


def construct_trace_hermitian_odd(
    sf: StandardFormSubfield, lam: FieldElement | None = None, strict: bool = True
) -> SubfieldLinearCode:
    """``[I A λA 0; wI wA λwA 0; 0 B λB B]`` for r = 1 (mod 4)."""
    spec = sf.code.spec
    if lam is None:
        lam = sqrt_minus_one(spec)
    _check_lambda(lam)
    if strict:
        _check_b_block(sf.B)
    return _trace_blocks(sf, lam)


THEOREMS = ("4.2i", "4.2ii", "4.5i", "4.5ii")


def construct(
    C: AnyCode, theorem: str, strict: bool = True
) -> tuple[AnyCode, StandardFormLinear | StandardFormSubfield]:
    """Bring C to the needed standard form, then apply the named construction."""
    if theorem in ("4.2i", "4.2ii"):
        if not isinstance(C, LinearCode):
            raise CategoryMismatch(f"construction {theorem} needs an F_q-linear code")
        sf = standard_form_linear(C)
        out = construct_hermitian_even(sf) if theorem == "4.2i" else construct_hermitian_odd(sf)
        return out, sf
    if theorem in ("4.5i", "4.5ii"):
        sfs = standard_form_subfield(C)
        if theorem == "4.5i":
            out = construct_trace_hermitian_even(sfs, strict=strict)
        else:
            out = construct_trace_hermitian_odd(sfs, strict=strict)
        return out, sfs
    raise ValueError(f"unknown construction {theorem!r}; expected one of {THEOREMS}")
