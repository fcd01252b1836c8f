"""Exact commutativity degree.

Three routes to the number of commuting pairs ``|{(x, y) : [x, y] = 0}|``:

* ``rank``: sum ``q**(n - rank ad_x)`` over every x (``|C(x)| = q**n / |Im ad_x|``).
* ``projective``: the same sum over one representative per line, each
  weighted by ``q - 1``, plus ``q**n`` for x = 0.  Valid because
  ``ad_{cx} = c ad_x``.
* ``naive``: evaluate the bracket on every pair straight from the structure
  constants (vectorised with numpy).  Kept as an independent oracle.
"""

from __future__ import annotations

import enum
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..gfq import Field
from ..lie_core import LieAlgebra, ad_rows, center, derived
from ..linalg import (
    DEFAULT_CAP,
    eliminate,
    check_cap,
    enumerate_projective_reps,
    enumerate_vectors,
)


class Method(str, enum.Enum):
    RANK_FULL = "rank"
    RANK_PROJECTIVE = "projective"
    NAIVE_PAIRS = "naive"


@dataclass(frozen=True)
class DegreeReport:
    degree: Fraction
    pair_count: int
    q: int
    dim: int
    center_dim: int
    derived_dim: int
    breadth: int
    central_quotient_dim: int
    rank_histogram: dict[int, int]
    method: Method
    elapsed: float = field(default=0.0, compare=False)

    def to_json(self) -> dict:
        return {
            "degree": f"{self.degree.numerator}/{self.degree.denominator}",
            "pair_count": self.pair_count,
            "q": self.q,
            "dim": self.dim,
            "center_dim": self.center_dim,
            "derived_dim": self.derived_dim,
            "breadth": self.breadth,
            "central_quotient_dim": self.central_quotient_dim,
            "rank_histogram": {str(r): c for r, c in sorted(self.rank_histogram.items())},
            "method": self.method.value,
            "elapsed_seconds": round(self.elapsed, 6),
        }


def _rank_of_ad(L: LieAlgebra, x) -> int:
    return len(eliminate(L.field, ad_rows(L, x), L.dim, reduced=False))


def rank_histogram_full(L: LieAlgebra, cap: int = DEFAULT_CAP) -> dict[int, int]:
    hist: Counter[int] = Counter()
    for x in enumerate_vectors(L.field, L.dim, cap):
        hist[_rank_of_ad(L, x)] += 1
    return dict(hist)


def rank_histogram_projective(L: LieAlgebra, cap: int = DEFAULT_CAP) -> dict[int, int]:
    w = L.field.q - 1
    hist: Counter[int] = Counter({0: 1})
    for x in enumerate_projective_reps(L.field, L.dim, cap):
        hist[_rank_of_ad(L, x)] += w
    return dict(hist)


class _VecOps:
    """Element-wise field arithmetic on integer code arrays."""

    def __init__(self, F: Field):
        self.p = F.p
        self.prime = F.k == 1
        if not self.prime:
            q = F.q
            self.add_t = np.array([[F.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
            self.mul_t = np.array([[F.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
            self.neg_t = np.array([F.neg(a) for a in range(q)], dtype=np.int64)

    def add(self, a, b):
        return (a + b) % self.p if self.prime else self.add_t[a, b]

    def sub(self, a, b):
        return (a - b) % self.p if self.prime else self.add_t[a, self.neg_t[b]]

    def mul(self, a, b):
        return (a * b) % self.p if self.prime else self.mul_t[a, b]


def centralizer_sizes_naive(L: LieAlgebra, cap: int = DEFAULT_CAP, block: int = 256) -> np.ndarray:
    """For each x (in enumeration order) the number of y with [x, y] = 0.

    Evaluates ``[x, y]_k = sum_{i<j} c_ij^k (x_i y_j - x_j y_i)`` for all
    pairs at once, one block of x at a time.
    """
    F, n = L.field, L.dim
    check_cap(F.q ** (2 * n), cap, f"naive pair count over {F!r}^{n}")
    V = np.array(list(enumerate_vectors(F, n, cap)), dtype=np.int64).reshape(-1, n)
    N = V.shape[0]
    ops = _VecOps(F)
    by_k: dict[int, list[tuple[int, int, int]]] = {}
    for i, j, k, c in L.terms:
        by_k.setdefault(k, []).append((i, j, c))
    out = np.empty(N, dtype=np.int64)
    for start in range(0, N, block):
        X = V[start : start + block]
        commute = np.ones((X.shape[0], N), dtype=bool)
        for k, entries in by_k.items():
            acc = np.zeros((X.shape[0], N), dtype=np.int64)
            for i, j, c in entries:
                w = ops.sub(ops.mul(X[:, i, None], V[None, :, j]), ops.mul(X[:, j, None], V[None, :, i]))
                acc = ops.add(acc, ops.mul(w, c))
            commute &= acc == 0
        out[start : start + X.shape[0]] = commute.sum(axis=1)
    return out


def _exact_log(value: int, q: int) -> int:
    e = 0
    while value > 1:
        value, r = divmod(value, q)
        if r:
            raise AssertionError(f"centralizer size {value} is not a power of {q}")
        e += 1
    return e


def rank_histogram_naive(L: LieAlgebra, cap: int = DEFAULT_CAP) -> dict[int, int]:
    sizes = centralizer_sizes_naive(L, cap)
    hist: Counter[int] = Counter()
    q, n = L.field.q, L.dim
    for size, count in zip(*np.unique(sizes, return_counts=True)):
        hist[n - _exact_log(int(size), q)] += int(count)
    return dict(hist)


def pair_count_from_histogram(hist: dict[int, int], q: int, n: int) -> int:
    return sum(count * q ** (n - r) for r, count in hist.items())


def comm_degree(
    L: LieAlgebra,
    method: Method | str = Method.RANK_PROJECTIVE,
    cap: int = DEFAULT_CAP,
) -> DegreeReport:
    """Exact commutativity degree with structural side data."""
    method = Method(method)
    t0 = time.perf_counter()
    q, n = L.field.q, L.dim
    if n == 0:
        hist = {0: 1}
    elif method is Method.RANK_FULL:
        hist = rank_histogram_full(L, cap)
    elif method is Method.RANK_PROJECTIVE:
        hist = rank_histogram_projective(L, cap)
    else:
        hist = rank_histogram_naive(L, cap)
    hist = {r: c for r, c in sorted(hist.items()) if c}
    pairs = pair_count_from_histogram(hist, q, n)
    zdim = center(L).dim
    return DegreeReport(
        degree=Fraction(pairs, q ** (2 * n)),
        pair_count=pairs,
        q=q,
        dim=n,
        center_dim=zdim,
        derived_dim=derived(L).dim,
        breadth=max(hist),
        central_quotient_dim=n - zdim,
        rank_histogram=hist,
        method=method,
        elapsed=time.perf_counter() - t0,
    )


def degree(L: LieAlgebra, method: Method | str = Method.RANK_PROJECTIVE, cap: int = DEFAULT_CAP) -> Fraction:
    return comm_degree(L, method, cap).degree


def breadth(L: LieAlgebra, cap: int = DEFAULT_CAP) -> int:
    """``max dim Im ad_x`` over all x, scanning one representative per line."""
    best = 0
    for x in enumerate_projective_reps(L.field, L.dim, cap):
        r = _rank_of_ad(L, x)
        if r > best:
            best = r
    return best
