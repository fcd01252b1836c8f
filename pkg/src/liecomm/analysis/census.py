"""Exhaustive enumeration of small structure-constant tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from ..errors import JacobiViolation
from ..gfq import Field
from ..lie_core import LieAlgebra, algebra_create, center, derived, stem_decompose
from .degree import degree


@dataclass(frozen=True)
class CensusEntry:
    algebra: LieAlgebra
    degree: Fraction


def iter_tables(F: Field, n: int) -> Iterator[list[tuple[int, int, int, int]]]:
    """Every alternating table of dimension n as sparse 1-based entries."""
    slots = [(i, j, k) for i in range(1, n + 1) for j in range(i + 1, n + 1) for k in range(1, n + 1)]
    for values in itertools.product(range(F.q), repeat=len(slots)):
        yield [(i, j, k, c) for (i, j, k), c in zip(slots, values) if c]


def census(F: Field, max_dim: int) -> tuple[list[CensusEntry], int]:
    """All Jacobi-valid tables of dimension 1..max_dim with their degrees.

    Returns the entries and the number of candidate tables rejected by the
    Jacobi check.
    """
    entries, rejected = [], 0
    for n in range(1, max_dim + 1):
        for entry in iter_tables(F, n):
            try:
                L = algebra_create(F, n, entry)
            except JacobiViolation:
                rejected += 1
                continue
            entries.append(CensusEntry(L, degree(L)))
    return entries, rejected


def stem_profile(L: LieAlgebra) -> tuple[int, int]:
    """``(dim T/Z(T), dim T^2)`` for the stem part T of L."""
    T, _ = stem_decompose(L)
    return T.dim - center(T).dim, derived(T).dim
