"""Lie algebras given by structure constants over GF(q).

``[e_i, e_j] = sum_k c[i][j][k] e_k``.  Internally indices are 0-based;
:func:`algebra_create` and the file format use 1-based indices so that
presentations can be compared line by line with their printed form.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    AlternatingViolation,
    AmbientMismatch,
    DimensionMismatch,
    DuplicateEntry,
    FieldMismatch,
    IndexOutOfRange,
    JacobiViolation,
    NotAnIdeal,
    NotASubalgebra,
    SingularMatrix,
)
from .gfq import Field, FieldElement
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    extend_basis,
    full_space,
    inverse,
    kernel_basis,
    lin_comb,
    subspace_intersect,
    subspace_le,
    subspace_span,
    subspace_sum,
)

Table = tuple[tuple[tuple[int, ...], ...], ...]


@dataclass(frozen=True)
class LieAlgebra:
    """A validated structure-constant Lie algebra.

    Construct with :func:`algebra_create` or :meth:`from_table`; both check
    the alternating law and the Jacobi identity.
    """

    field: Field
    dim: int
    table: Table
    name: str | None = field(default=None, compare=False)

    @classmethod
    def from_table(cls, F: Field, table, name: str | None = None) -> LieAlgebra:
        n = len(table)
        t = tuple(tuple(tuple(int(c) for c in table[i][j]) for j in range(n)) for i in range(n))
        L = cls(F, n, t, name)
        _validate(L)
        return L

    @property
    def order(self) -> int:
        return self.field.q**self.dim

    @functools.cached_property
    def terms(self) -> tuple[tuple[int, int, int, int], ...]:
        """Nonzero ``(i, j, k, c)`` with ``i < j``, 0-based."""
        n = self.dim
        return tuple(
            (i, j, k, self.table[i][j][k])
            for i in range(n)
            for j in range(i + 1, n)
            for k in range(n)
            if self.table[i][j][k]
        )

    @functools.cached_property
    def ad_basis(self) -> tuple[tuple[Vector, ...], ...]:
        """``ad_basis[i][k][j] = c[i][j][k]``: the matrix rows of ad_{e_i}."""
        n = self.dim
        return tuple(
            tuple(tuple(self.table[i][j][k] for j in range(n)) for k in range(n)) for i in range(n)
        )

    def is_abelian(self) -> bool:
        return not self.terms

    def __repr__(self):
        label = self.name or "LieAlgebra"
        return f"<{label} dim={self.dim} over {self.field!r}>"


def _validate(L: LieAlgebra) -> None:
    F, n, c = L.field, L.dim, L.table
    for i in range(n):
        for k in range(n):
            if c[i][i][k]:
                raise AlternatingViolation(f"[e_{i + 1}, e_{i + 1}] has nonzero coordinate {k + 1}")
        for j in range(i + 1, n):
            for k in range(n):
                if c[j][i][k] != F.neg(c[i][j][k]):
                    raise AlternatingViolation(
                        f"table is not antisymmetric at ({i + 1}, {j + 1}, {k + 1})"
                    )
    jacobi_check(L)


def jacobi_check(L: LieAlgebra) -> None:
    """Exhaustive Jacobi check over basis triples ``i < j < k``."""
    F, n, c = L.field, L.dim, L.table
    add, mul = F.add, F.mul
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                cjk, cij, cki = c[j][k], c[i][j], c[k][i]
                for l in range(n):
                    s = 0
                    for m in range(n):
                        if cjk[m]:
                            s = add(s, mul(cjk[m], c[i][m][l]))
                        if cij[m]:
                            s = add(s, mul(cij[m], c[k][m][l]))
                        if cki[m]:
                            s = add(s, mul(cki[m], c[j][m][l]))
                    if s:
                        raise JacobiViolation((i + 1, j + 1, k + 1), l + 1, s)


def _code(F: Field, c) -> int:
    if isinstance(c, FieldElement):
        if c.field != F:
            raise FieldMismatch(f"coefficient over {c.field!r}, algebra over {F!r}")
        return c.code
    c = int(c)
    if not 0 <= c < F.q:
        raise IndexOutOfRange(f"coefficient code {c} outside [0, {F.q})")
    return c


def algebra_create(
    F: Field,
    dim: int,
    brackets: Iterable[tuple[int, int, int, object]],
    name: str | None = None,
) -> LieAlgebra:
    """Build an algebra from sparse 1-based entries ``(i, j, k, c)`` with ``i < j``.

    The ``j > i`` half of the table is filled in by antisymmetry.
    """
    if dim < 0:
        raise IndexOutOfRange(f"dimension {dim} < 0")
    c = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    seen = set()
    for entry in brackets:
        i, j, k, coef = entry
        if not (1 <= i < j <= dim and 1 <= k <= dim):
            raise IndexOutOfRange(f"entry {tuple(entry)} needs 1 <= i < j <= {dim}, 1 <= k <= {dim}")
        if (i, j, k) in seen:
            raise DuplicateEntry(f"duplicate bracket entry ({i}, {j}, {k})")
        seen.add((i, j, k))
        code = _code(F, coef)
        c[i - 1][j - 1][k - 1] = code
        c[j - 1][i - 1][k - 1] = F.neg(code)
    return LieAlgebra.from_table(F, c, name)


def zero_algebra(F: Field) -> LieAlgebra:
    return LieAlgebra(F, 0, (), "0")


def _vec(L: LieAlgebra, v: Sequence) -> Vector:
    if len(v) != L.dim:
        raise DimensionMismatch(f"vector of length {len(v)} in a {L.dim}-dimensional algebra")
    return tuple(_code(L.field, a) for a in v)


def bracket(L: LieAlgebra, u: Sequence, v: Sequence) -> Vector:
    u, v = _vec(L, u), _vec(L, v)
    F = L.field
    add, mul, sub = F.add, F.mul, F.sub
    out = [0] * L.dim
    for i, j, k, c in L.terms:
        w = sub(mul(u[i], v[j]), mul(u[j], v[i]))
        if w:
            out[k] = add(out[k], mul(w, c))
    return tuple(out)


def ad_rows(L: LieAlgebra, x: Vector) -> list[list[int]]:
    """Rows of the matrix of ad_x as mutable lists (hot path, no validation)."""
    F, n = L.field, L.dim
    rows = [[0] * n for _ in range(n)]
    tabs = F.tables
    if tabs is None:
        add, mul = F.add, F.mul
        for i, xi in enumerate(x):
            if xi:
                for k, brow in enumerate(L.ad_basis[i]):
                    row = rows[k]
                    for j, c in enumerate(brow):
                        if c:
                            row[j] = add(row[j], mul(xi, c))
        return rows
    add_t = tabs.add
    for i, xi in enumerate(x):
        if xi:
            mrow = tabs.mul[xi]
            for k, brow in enumerate(L.ad_basis[i]):
                row = rows[k]
                for j, c in enumerate(brow):
                    if c:
                        row[j] = add_t[row[j]][mrow[c]]
    return rows


def ad_matrix(L: LieAlgebra, x: Sequence) -> Matrix:
    """Matrix of y -> [x, y]; column j is [x, e_j]."""
    rows = ad_rows(L, _vec(L, x))
    return Matrix(L.field, tuple(tuple(r) for r in rows), L.dim)


def full(L: LieAlgebra) -> Subspace:
    return full_space(L.field, L.dim)


def centralizer(L: LieAlgebra, x: Sequence) -> Subspace:
    return kernel_basis(ad_matrix(L, x))


def center(L: LieAlgebra) -> Subspace:
    """Common kernel of all ad_{e_i}: stack their matrices and solve once."""
    rows = [r for i in range(L.dim) for r in L.ad_basis[i]]
    return kernel_basis(Matrix(L.field, tuple(rows), L.dim))


def _check_space(L: LieAlgebra, U: Subspace) -> None:
    if U.field != L.field or U.ambient_dim != L.dim:
        raise AmbientMismatch(f"subspace of {U.field!r}^{U.ambient_dim} in {L!r}")


def product_ideal(L: LieAlgebra, I: Subspace, J: Subspace) -> Subspace:
    """Span of ``[u, v]`` over basis vectors u of I and v of J."""
    _check_space(L, I)
    _check_space(L, J)
    return subspace_span(L.field, L.dim, (bracket(L, u, v) for u in I.basis for v in J.basis))


def derived(L: LieAlgebra) -> Subspace:
    n = L.dim
    return subspace_span(L.field, n, (L.table[i][j] for i in range(n) for j in range(i + 1, n)))


@dataclass(frozen=True)
class SeriesResult:
    terms: tuple[Subspace, ...]
    stabilized: bool
    nilpotency_class: int | None


def lower_central_series(L: LieAlgebra) -> SeriesResult:
    """``L_0 = L``, ``L_k = [L, L_{k-1}]`` until a term is 0 or repeats."""
    top = full(L)
    terms = [top]
    while terms[-1].dim > 0:
        nxt = product_ideal(L, top, terms[-1])
        if nxt == terms[-1]:
            return SeriesResult(tuple(terms), True, None)
        terms.append(nxt)
    return SeriesResult(tuple(terms), False, len(terms) - 1)


def is_nilpotent(L: LieAlgebra) -> bool:
    return lower_central_series(L).nilpotency_class is not None


def nilpotency_class(L: LieAlgebra) -> int | None:
    return lower_central_series(L).nilpotency_class


def is_ideal(L: LieAlgebra, U: Subspace) -> bool:
    return subspace_le(product_ideal(L, U, full(L)), U)


def is_subalgebra(L: LieAlgebra, U: Subspace) -> bool:
    return subspace_le(product_ideal(L, U, U), U)


def subalgebra(L: LieAlgebra, U: Subspace, name: str | None = None) -> LieAlgebra:
    """The subalgebra U as a standalone algebra on U's RREF basis."""
    _check_space(L, U)
    if not is_subalgebra(L, U):
        raise NotASubalgebra("subspace is not closed under the bracket")
    b = U.basis
    table = [[U.coordinates(bracket(L, u, v)) for v in b] for u in b]
    return LieAlgebra.from_table(L.field, table, name)


def direct_sum(L1: LieAlgebra, L2: LieAlgebra, name: str | None = None) -> LieAlgebra:
    if L1.field != L2.field:
        raise FieldMismatch(f"{L1.field!r} vs {L2.field!r}")
    n1, n2 = L1.dim, L2.dim
    n = n1 + n2
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            c[i][j][:n1] = L1.table[i][j]
    for i in range(n2):
        for j in range(n2):
            c[n1 + i][n1 + j][n1:] = L2.table[i][j]
    if name is None and L1.name and L2.name:
        name = f"{L1.name}+{L2.name}"
    return LieAlgebra.from_table(L1.field, c, name)


def coordinates_in(F: Field, basis_inverse: Matrix, v: Sequence[int]) -> Vector:
    """Coordinates of v w.r.t. the basis whose row matrix has inverse ``basis_inverse``."""
    # v = c B  =>  c = v B^{-1};  as columns: c = (B^{-1})^T v
    n = len(v)
    return lin_comb(F, v, basis_inverse.rows, n)


def quotient(L: LieAlgebra, N: Subspace, name: str | None = None) -> tuple[LieAlgebra, Matrix]:
    """``L/N`` on the coset representatives ``extend_basis(N, L)``.

    Returns the quotient algebra and the projection matrix taking
    L-coordinates to quotient coordinates.
    """
    _check_space(L, N)
    if not is_ideal(L, N):
        raise NotAnIdeal("cannot form a quotient by a non-ideal")
    F, n, d = L.field, L.dim, N.dim
    W = extend_basis(N, full(L)).basis
    B = Matrix(F, N.basis + W, n)
    Binv = inverse(B)
    s = len(W)

    def qcoords(v):
        return coordinates_in(F, Binv, v)[d:]

    table = [[qcoords(bracket(L, u, v)) for v in W] for u in W]
    proj = Matrix(F, tuple(tuple(Binv.rows[j][d + a] for j in range(n)) for a in range(s)), n)
    return LieAlgebra.from_table(F, table, name), proj


def change_basis(L: LieAlgebra, P: Matrix, name: str | None = None) -> LieAlgebra:
    """The same algebra on the basis given by the columns of ``P``."""
    if P.field != L.field:
        raise FieldMismatch("basis change over a different field")
    if P.shape != (L.dim, L.dim):
        raise DimensionMismatch(f"{P.shape} basis change for a {L.dim}-dimensional algebra")
    try:
        Pinv = inverse(P)
    except SingularMatrix:
        raise SingularMatrix("basis change matrix is singular") from None
    cols = [P.column(a) for a in range(L.dim)]
    table = [[Pinv.apply(bracket(L, u, v)) for v in cols] for u in cols]
    return LieAlgebra.from_table(L.field, table, name if name is not None else L.name)


def is_stem(L: LieAlgebra) -> bool:
    return subspace_le(center(L), derived(L))


def stem_decompose(L: LieAlgebra) -> tuple[LieAlgebra, int]:
    """Split ``L = T + A`` with T stem and A central; return ``(T, dim A)``.

    A is the greedy complement of ``Z & L^2`` inside Z.  T is grown from
    L^2 by the greedy complement of ``L^2 + A`` in L, so T is an ideal
    containing L^2 and meeting A trivially.
    """
    Z, D = center(L), derived(L)
    A = extend_basis(subspace_intersect(Z, D), Z)
    DA = subspace_sum(D, A)
    T_space = subspace_sum(D, extend_basis(DA, full(L)))
    T = subalgebra(L, T_space, name=f"stem({L.name})" if L.name else None)
    return T, A.dim


def abelian_part(L: LieAlgebra) -> Subspace:
    Z, D = center(L), derived(L)
    return extend_basis(subspace_intersect(Z, D), Z)


def embed(L: LieAlgebra, vectors: Iterable[Sequence[int]]) -> Subspace:
    return subspace_span(L.field, L.dim, vectors)
