"""Dense exact linear algebra over GF(q).

Vectors are tuples of element codes.  A :class:`Matrix` acts on column
vectors; a :class:`Subspace` stores its basis in reduced row-echelon form,
so two equal subspaces compare equal as plain data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    AmbientMismatch,
    DimensionMismatch,
    EnumerationCapExceeded,
    FieldMismatch,
    NotContained,
    SingularMatrix,
)
from .gfq import Field

DEFAULT_CAP = 10**7

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: tuple[Vector, ...]
    ncols: int

    @classmethod
    def from_rows(cls, F: Field, rows: Iterable[Sequence[int]], ncols: int | None = None) -> Matrix:
        rows = tuple(tuple(int(c) for c in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch(f"ragged matrix: row of length {len(r)}, expected {ncols}")
            for c in r:
                if not 0 <= c < F.q:
                    raise DimensionMismatch(f"entry {c} is not a code of {F!r}")
        return cls(F, rows, ncols)

    @classmethod
    def from_columns(cls, F: Field, cols: Sequence[Sequence[int]], nrows: int) -> Matrix:
        return cls(F, tuple(tuple(col[i] for col in cols) for i in range(nrows)), len(cols))

    @classmethod
    def identity(cls, F: Field, n: int) -> Matrix:
        return cls(F, tuple(unit_vector(n, i) for i in range(n)), n)

    @classmethod
    def zeros(cls, F: Field, nrows: int, ncols: int) -> Matrix:
        return cls(F, ((0,) * ncols,) * nrows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> Matrix:
        return Matrix(self.field, tuple(self.column(j) for j in range(self.ncols)), self.nrows)

    def apply(self, v: Sequence[int]) -> Vector:
        """Matrix-vector product ``M v``."""
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} against {self.shape} matrix")
        return tuple(dot(self.field, r, v) for r in self.rows)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        cols = [other.column(j) for j in range(other.ncols)]
        return Matrix(
            self.field,
            tuple(tuple(dot(self.field, r, c) for c in cols) for r in self.rows),
            other.ncols,
        )

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def unit_vector(n: int, i: int) -> Vector:
    return tuple(1 if j == i else 0 for j in range(n))


def dot(F: Field, u: Sequence[int], v: Sequence[int]) -> int:
    add, mul = F.add, F.mul
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = add(acc, mul(a, b))
    return acc


def vec_add(F: Field, u: Sequence[int], v: Sequence[int]) -> Vector:
    add = F.add
    return tuple(add(a, b) for a, b in zip(u, v))


def vec_scale(F: Field, c: int, u: Sequence[int]) -> Vector:
    mul = F.mul
    return tuple(mul(c, a) for a in u)


def lin_comb(F: Field, coeffs: Sequence[int], vectors: Sequence[Sequence[int]], n: int) -> Vector:
    """``sum_i coeffs[i] * vectors[i]`` as a length-``n`` vector."""
    add, mul = F.add, F.mul
    acc = [0] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for j, a in enumerate(v):
                if a:
                    acc[j] = add(acc[j], mul(c, a))
    return tuple(acc)


def eliminate(F: Field, rows: list[list[int]], ncols: int, reduced: bool) -> list[int]:
    """In-place Gaussian elimination; returns pivot columns.

    With ``reduced`` the result is the reduced row-echelon form; otherwise
    only forward elimination runs, which is enough for rank.
    """
    tabs = F.tables
    if tabs is None:
        return _eliminate_slow(F, rows, ncols, reduced)
    add_t, mul_t, neg_t, inv_t = tabs
    pivots = []
    r = 0
    nrows = len(rows)
    for col in range(ncols):
        if r == nrows:
            break
        piv = r
        while piv < nrows and not rows[piv][col]:
            piv += 1
        if piv == nrows:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        if prow[col] != 1:
            srow = mul_t[inv_t[prow[col]]]
            prow = rows[r] = [srow[a] for a in prow]
        for i in range(0 if reduced else r + 1, nrows):
            row = rows[i]
            f = row[col]
            if f and i != r:
                mrow = mul_t[neg_t[f]]
                for j in range(col, ncols):
                    a = prow[j]
                    if a:
                        row[j] = add_t[row[j]][mrow[a]]
        pivots.append(col)
        r += 1
    return pivots


def _eliminate_slow(F: Field, rows: list[list[int]], ncols: int, reduced: bool) -> list[int]:
    # same algorithm through Field methods, for fields too large to tabulate
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    pivots = []
    r = 0
    nrows = len(rows)
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        if prow[col] != 1:
            s = inv(prow[col])
            prow = rows[r] = [mul(s, a) for a in prow]
        for i in range(0 if reduced else r + 1, nrows):
            f = rows[i][col]
            if f and i != r:
                nf = neg(f)
                row = rows[i]
                for j in range(col, ncols):
                    if prow[j]:
                        row[j] = add(row[j], mul(nf, prow[j]))
        pivots.append(col)
        r += 1
    return pivots


def rref(M: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form (zero rows kept at the bottom) and rank."""
    rows = [list(r) for r in M.rows]
    pivots = eliminate(M.field, rows, M.ncols, reduced=True)
    return Matrix(M.field, tuple(tuple(r) for r in rows), M.ncols), len(pivots)


def rank(M: Matrix) -> int:
    return rank_of_rows(M.field, M.rows, M.ncols)


def rank_of_rows(F: Field, rows: Iterable[Sequence[int]], ncols: int) -> int:
    work = [list(r) for r in rows]
    return len(eliminate(F, work, ncols, reduced=False))


def inverse(M: Matrix) -> Matrix:
    n = M.nrows
    if M.ncols != n:
        raise SingularMatrix(f"non-square {M.shape} matrix")
    rows = [list(r) + list(unit_vector(n, i)) for i, r in enumerate(M.rows)]
    pivots = eliminate(M.field, rows, 2 * n, reduced=True)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return Matrix(M.field, tuple(tuple(r[n:]) for r in rows), n)


def is_invertible(M: Matrix) -> bool:
    return M.nrows == M.ncols and rank(M) == M.nrows


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_q^n held by its canonical (RREF) basis."""

    field: Field
    ambient_dim: int
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def order(self) -> int:
        return self.field.q**self.dim

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, a in enumerate(r) if a) for r in self.basis)

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, self.basis, self.ambient_dim)

    def coordinates(self, v: Sequence[int]) -> Vector:
        """Coordinates of ``v`` in the RREF basis; ``NotContained`` if v is outside."""
        coords = tuple(v[j] for j in self.pivots)
        if lin_comb(self.field, coords, self.basis, self.ambient_dim) != tuple(v):
            raise NotContained(f"{tuple(v)} is not in the subspace")
        return coords

    def contains(self, v: Sequence[int]) -> bool:
        return subspace_contains(self, v)

    def __contains__(self, v) -> bool:
        return subspace_contains(self, v)

    def __le__(self, other: Subspace) -> bool:
        return subspace_le(self, other)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis={list(self.basis)})"


def _same(U: Subspace, V: Subspace) -> None:
    if U.field != V.field or U.ambient_dim != V.ambient_dim:
        raise AmbientMismatch(
            f"subspaces of {U.field!r}^{U.ambient_dim} and {V.field!r}^{V.ambient_dim}"
        )


def zero_subspace(F: Field, n: int) -> Subspace:
    return Subspace(F, n, ())


def full_space(F: Field, n: int) -> Subspace:
    return Subspace(F, n, tuple(unit_vector(n, i) for i in range(n)))


def subspace_span(F: Field, n: int, vectors: Iterable[Sequence[int]]) -> Subspace:
    rows = []
    for v in vectors:
        if len(v) != n:
            raise AmbientMismatch(f"vector of length {len(v)} in ambient dimension {n}")
        rows.append(list(v))
    pivots = eliminate(F, rows, n, reduced=True)
    return Subspace(F, n, tuple(tuple(r) for r in rows[: len(pivots)]))


def subspace_contains(U: Subspace, v: Sequence[int]) -> bool:
    if len(v) != U.ambient_dim:
        raise AmbientMismatch(f"vector of length {len(v)} in ambient dimension {U.ambient_dim}")
    coords = tuple(v[j] for j in U.pivots)
    return lin_comb(U.field, coords, U.basis, U.ambient_dim) == tuple(v)


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    _same(U, V)
    return subspace_span(U.field, U.ambient_dim, U.basis + V.basis)


def subspace_le(U: Subspace, V: Subspace) -> bool:
    _same(U, V)
    return all(subspace_contains(V, u) for u in U.basis)


def subspace_intersect(U: Subspace, V: Subspace) -> Subspace:
    """Solve ``sum a_i u_i = sum b_j v_j`` and map the solutions back into U."""
    _same(U, V)
    F, n = U.field, U.ambient_dim
    if U.dim == 0 or V.dim == 0:
        return zero_subspace(F, n)
    cols = list(U.basis) + [tuple(F.neg(a) for a in v) for v in V.basis]
    M = Matrix.from_columns(F, cols, n)
    K = kernel_basis(M)
    return subspace_span(F, n, (lin_comb(F, k[: U.dim], U.basis, n) for k in K.basis))


def kernel_basis(M: Matrix) -> Subspace:
    """The null space ``{v : M v = 0}`` as a canonical subspace."""
    F, n = M.field, M.ncols
    rows = [list(r) for r in M.rows]
    pivots = eliminate(F, rows, n, reduced=True)
    free = [j for j in range(n) if j not in pivots]
    vectors = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for r, pc in enumerate(pivots):
            if rows[r][f]:
                v[pc] = F.neg(rows[r][f])
        vectors.append(v)
    return subspace_span(F, n, vectors)


def extend_basis(U: Subspace, within: Subspace) -> Subspace:
    """A complement W of U inside ``within``: ``U & W = 0`` and ``U + W = within``.

    Greedy: walk the RREF basis vectors of ``within`` in order and keep each
    one not already in the span accumulated so far.
    """
    _same(U, within)
    if not subspace_le(U, within):
        raise NotContained("U is not contained in the enclosing subspace")
    F, n = U.field, U.ambient_dim
    acc = list(U.basis)
    kept = []
    rank_now = U.dim
    for w in within.basis:
        if rank_of_rows(F, acc + [w], n) > rank_now:
            acc.append(w)
            kept.append(w)
            rank_now += 1
    return subspace_span(F, n, kept)


def complement_basis(U: Subspace, within: Subspace) -> tuple[Vector, ...]:
    """Basis vectors of :func:`extend_basis`'s complement in greedy order."""
    return extend_basis(U, within).basis


def check_cap(count: int, cap: int, what: str) -> None:
    if count > cap:
        raise EnumerationCapExceeded(f"{what}: {count} exceeds the enumeration cap {cap}")


def enumerate_vectors(F: Field, n: int, cap: int = DEFAULT_CAP) -> Iterator[Vector]:
    """All ``q**n`` vectors in lexicographic code order, zero first."""
    check_cap(F.q**n, cap, f"enumerating {F!r}^{n}")
    return itertools.product(range(F.q), repeat=n)


def enumerate_projective_reps(F: Field, n: int, cap: int = DEFAULT_CAP) -> Iterator[Vector]:
    """One vector per line of F_q^n: the nonzero vectors whose first nonzero entry is 1.

    Ordered by the position of the leading 1, then lexicographically.
    """
    check_cap(F.q**n, cap, f"enumerating lines of {F!r}^{n}")
    return _projective(F.q, n)


def _projective(q: int, n: int) -> Iterator[Vector]:
    for lead in range(n):
        head = (0,) * lead + (1,)
        for rest in itertools.product(range(q), repeat=n - lead - 1):
            yield head + rest


def count_gl(n: int, q: int) -> int:
    """Order of GL(n, q)."""
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def enumerate_invertible(F: Field, n: int) -> Iterator[Matrix]:
    """Invertible n x n matrices in lexicographic order of their row-major codes."""
    vectors = list(itertools.product(range(F.q), repeat=n))

    def extend(chosen: list[Vector], echelon: list[list[int]]):
        if len(chosen) == n:
            yield Matrix(F, tuple(chosen), n)
            return
        for v in vectors:
            if not any(v):
                continue
            rows = [list(r) for r in echelon] + [list(v)]
            if len(eliminate(F, rows, n, reduced=False)) == len(chosen) + 1:
                yield from extend(chosen + [v], [r for r in rows if any(r)])

    return extend([], [])
