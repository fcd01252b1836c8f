"""Isoclinism witnesses: verification and exhaustive search.

Coordinates: L/Z(L) is identified with the greedy complement
``extend_basis(Z(L), L)`` (coset representatives w_1..w_s) and L^2 with its
RREF basis.  ``alpha`` (s x s) and ``beta`` (r x r) act on column
coordinate vectors, so column a of ``alpha`` is the image of the coset of
w_a.  The commutator map sends ``(w_a, w_b)`` to the L^2-coordinates of
``[w_a, w_b]``; the witness is valid when

    beta * kappa_L(w_a, w_b) == kappa_M(alpha w_a, alpha w_b)

for every ``a < b`` (bilinearity and antisymmetry cover the rest).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..errors import BudgetExceeded, DimensionMismatch, FieldMismatch, SingularMatrix, SingularWitness
from ..lie_core import LieAlgebra, bracket, center, derived, full
from ..linalg import (
    Matrix,
    Subspace,
    count_gl,
    enumerate_invertible,
    extend_basis,
    inverse,
    is_invertible,
    lin_comb,
    rank_of_rows,
)

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class IsoclinismWitness:
    alpha: Matrix
    beta: Matrix

    def to_json(self) -> dict:
        return {"alpha": self.alpha.to_json(), "beta": self.beta.to_json()}


@dataclass(frozen=True)
class _Frame:
    """Coset representatives of L/Z(L) and the commutator map in L^2 coordinates."""

    algebra: LieAlgebra
    reps: tuple[tuple[int, ...], ...]
    derived: Subspace

    @property
    def s(self) -> int:
        return len(self.reps)

    @property
    def r(self) -> int:
        return self.derived.dim

    def lift(self, coords) -> tuple[int, ...]:
        return lin_comb(self.algebra.field, coords, self.reps, self.algebra.dim)

    def kappa(self, u, v) -> tuple[int, ...]:
        return self.derived.coordinates(bracket(self.algebra, u, v))


def _frame(L: LieAlgebra) -> _Frame:
    reps = extend_basis(center(L), full(L)).basis
    return _Frame(L, reps, derived(L))


def invariant_dims(L: LieAlgebra) -> tuple[int, int]:
    """``(dim L/Z(L), dim L^2)``: equal for isoclinic algebras."""
    return L.dim - center(L).dim, derived(L).dim


def _diagram_commutes(fl: _Frame, fm: _Frame, alpha: Matrix, beta: Matrix) -> bool:
    images = [fm.lift(alpha.column(a)) for a in range(fl.s)]
    for a, b in combinations(range(fl.s), 2):
        left = beta.apply(fl.kappa(fl.reps[a], fl.reps[b]))
        if left != fm.kappa(images[a], images[b]):
            return False
    return True


def verify_isoclinism(L: LieAlgebra, M: LieAlgebra, w: IsoclinismWitness) -> bool:
    if L.field != M.field:
        raise FieldMismatch("algebras over different fields")
    fl, fm = _frame(L), _frame(M)
    if (fl.s, fl.r) != (fm.s, fm.r):
        raise DimensionMismatch(
            f"dim L/Z, dim L^2 = {(fl.s, fl.r)} vs {(fm.s, fm.r)}"
        )
    if w.alpha.shape != (fl.s, fl.s) or w.beta.shape != (fl.r, fl.r):
        raise DimensionMismatch(
            f"witness shapes {w.alpha.shape}, {w.beta.shape}; expected ({fl.s}, {fl.s}), ({fl.r}, {fl.r})"
        )
    if not (is_invertible(w.alpha) and is_invertible(w.beta)):
        raise SingularWitness("alpha and beta must be invertible")
    return _diagram_commutes(fl, fm, w.alpha, w.beta)


def search_isoclinism(
    L: LieAlgebra, M: LieAlgebra, budget: int = DEFAULT_BUDGET
) -> IsoclinismWitness | None:
    """First witness in lexicographic (alpha, beta) order, or None if none exists.

    Mismatched invariant dimensions are a definitive negative.  Raises
    ``BudgetExceeded`` when ``|GL(s,q)| * |GL(r,q)| > budget``.

    The commutator values of L span L^2, so for a given alpha at most one
    beta can commute the diagram; it is solved for directly instead of
    scanning GL(r, q).  The returned pair is the one an exhaustive scan in
    the same order would find first, except that the identity pair is
    tried before the scan so equal presentations get the obvious witness.
    """
    if L.field != M.field:
        raise FieldMismatch("algebras over different fields")
    fl, fm = _frame(L), _frame(M)
    if (fl.s, fl.r) != (fm.s, fm.r):
        return None
    F, s, r = L.field, fl.s, fl.r
    space = count_gl(s, F.q) * count_gl(r, F.q)
    if space > budget:
        raise BudgetExceeded(f"search space |GL({s},{F.q})| * |GL({r},{F.q})| = {space} > {budget}")

    ident = (Matrix.identity(F, s), Matrix.identity(F, r))
    if _diagram_commutes(fl, fm, *ident):
        return IsoclinismWitness(*ident)

    # pairs whose commutators form a basis of L^2
    pairs, cols = [], []
    for a, b in combinations(range(s), 2):
        k = fl.kappa(fl.reps[a], fl.reps[b])
        if rank_of_rows(F, cols + [k], r) > len(cols):
            pairs.append((a, b))
            cols.append(k)
        if len(cols) == r:
            break
    K_inv = inverse(Matrix.from_columns(F, cols, r)) if r else Matrix(F, (), 0)

    for alpha in enumerate_invertible(F, s):
        images = [fm.lift(alpha.column(a)) for a in range(s)]
        targets = [fm.kappa(images[a], images[b]) for a, b in pairs]
        beta = Matrix.from_columns(F, targets, r) @ K_inv if r else Matrix(F, (), 0)
        try:
            inverse(beta)
        except SingularMatrix:
            continue
        if _diagram_commutes(fl, fm, alpha, beta):
            return IsoclinismWitness(alpha, beta)
    return None
