"""Closed-form bounds and exact checkers for the degree inequalities.

Every checker returns a list of :class:`Check` records carrying both sides
of the relation as exact rationals; nothing is raised on a failed relation,
so callers can report all failures at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import AbelianInput, InvalidParams, NotAnIdeal, NotASubalgebra, NotNested
from ..lie_core import (
    LieAlgebra,
    center,
    derived,
    full,
    is_ideal,
    is_subalgebra,
    quotient,
    subalgebra,
)
from ..linalg import DEFAULT_CAP, Subspace, subspace_intersect, subspace_le, subspace_sum
from .degree import DegreeReport, Method, comm_degree

FIVE_EIGHTHS = Fraction(5, 8)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    lhs: Fraction | int | bool
    relation: str
    rhs: Fraction | int | bool
    note: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {_fmt(self.lhs)} {self.relation} {_fmt(self.rhs)}"
        return f"{text} ({self.note})" if self.note else text

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "passed": self.passed,
            "lhs": _fmt(self.lhs),
            "relation": self.relation,
            "rhs": _fmt(self.rhs),
            "note": self.note,
        }


def _fmt(v) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def bound_upper_general(q: int) -> Fraction:
    """``(q^2 + q - 1) / q^3``: the ceiling for every non-abelian algebra."""
    if q < 2:
        raise InvalidParams(f"q must be >= 2, got {q}")
    return Fraction(q**2 + q - 1, q**3)


def bound_upper_centerless(n: int, q: int) -> Fraction:
    """``(q^n + q - 1) / q^(n+1)`` for n-dimensional algebras with trivial center."""
    if q < 2 or n < 2:
        raise InvalidParams(f"need q >= 2 and n >= 2, got q={q}, n={n}")
    return Fraction(q**n + q - 1, q ** (n + 1))


def bound_lower(t: int, q: int) -> Fraction:
    """``1/q^t + 1/q^(t-1) - 1/q^(2t-1)`` where ``t = dim L/Z(L)``."""
    if q < 2 or t < 2:
        raise InvalidParams(f"need q >= 2 and t >= 2, got q={q}, t={t}")
    return Fraction(1, q**t) + Fraction(1, q ** (t - 1)) - Fraction(1, q ** (2 * t - 1))


def check_bounds(L: LieAlgebra, report: DegreeReport | None = None, cap: int = DEFAULT_CAP) -> list[Check]:
    if L.is_abelian():
        raise AbelianInput("bounds are stated for non-abelian algebras")
    if report is None:
        report = comm_degree(L, Method.RANK_PROJECTIVE, cap)
    q, n, d = report.q, report.dim, report.degree
    t, b = report.central_quotient_dim, report.breadth
    general = bound_upper_general(q)
    out = [Check("upper_bound_general", d <= general, d, "<=", general)]

    if report.center_dim == 0:
        cl = bound_upper_centerless(n, q)
        out.append(Check("upper_bound_centerless", d <= cl, d, "<=", cl))
        eq, d1 = d == cl, report.derived_dim == 1
        out.append(
            Check(
                "centerless_equality_iff_derived_dim_1",
                eq == d1,
                eq,
                "<=>",
                d1,
                ("equality, " if eq else "") + f"dim L^2 = {report.derived_dim}",
            )
        )
    else:
        out.append(Check("upper_bound_centerless", True, d, "n/a", "-", "center is nonzero"))

    low = bound_lower(t, q)
    out.append(Check("lower_bound_central_quotient", d >= low, d, ">=", low, f"t = {t}"))
    at_top, t2 = d == general, t == 2
    out.append(Check("top_degree_iff_central_quotient_dim_2", at_top == t2, at_top, "<=>", t2, f"t = {t}"))
    out.append(Check("central_quotient_exceeds_breadth", t >= b + 1, t, ">=", b + 1, f"b = {b}"))
    out.append(Check("five_eighths_ceiling", d <= FIVE_EIGHTHS, d, "<=", FIVE_EIGHTHS))
    return out


def check_gap(d: Fraction) -> Check:
    """No degree strictly between 5/8 and 1."""
    inside = FIVE_EIGHTHS < d < 1
    return Check("no_degree_in_open_5/8_1", not inside, d, "not in", "(5/8, 1)")


def _deg(L: LieAlgebra, cap: int) -> Fraction:
    return comm_degree(L, Method.RANK_PROJECTIVE, cap).degree


def check_subalgebra_sandwich(L: LieAlgebra, H: Subspace, cap: int = DEFAULT_CAP) -> list[Check]:
    """``(|H|/|L|)^2 d(H) <= d(L) <= d(H)``, with ``d(L) = d(H)`` when ``L = H + Z(L)``."""
    if not is_subalgebra(L, H):
        raise NotASubalgebra("H is not closed under the bracket")
    dL = _deg(L, cap)
    dH = _deg(subalgebra(L, H), cap)
    scale = Fraction(H.order, L.order) ** 2
    out = [
        Check("sandwich_lower", scale * dH <= dL, scale * dH, "<=", dL),
        Check("sandwich_upper", dL <= dH, dL, "<=", dH),
    ]
    if subspace_sum(H, center(L)) == full(L):
        out.append(Check("sandwich_equality_when_H_plus_Z_is_L", dL == dH, dL, "==", dH))
    return out


def check_quotient_product(L: LieAlgebra, N: Subspace, cap: int = DEFAULT_CAP) -> list[Check]:
    """``d(L) <= d(L/N) d(N)``, with equality when ``N & L^2 = 0``."""
    if not is_ideal(L, N):
        raise NotAnIdeal("N is not an ideal")
    dL = _deg(L, cap)
    prod = _deg(quotient(L, N)[0], cap) * _deg(subalgebra(L, N), cap)
    out = [Check("quotient_product_bound", dL <= prod, dL, "<=", prod)]
    if subspace_intersect(N, derived(L)).dim == 0:
        out.append(Check("quotient_product_equality_when_N_meets_L2_trivially", dL == prod, dL, "==", prod))
    return out


def check_quotient_monotonicity(L: LieAlgebra, N: Subspace, M: Subspace, cap: int = DEFAULT_CAP) -> list[Check]:
    """``d(L/N) <= d(L/M)`` for ideals ``N <= M``."""
    if not is_ideal(L, N) or not is_ideal(L, M):
        raise NotAnIdeal("N and M must both be ideals")
    if not subspace_le(N, M):
        raise NotNested("N is not contained in M")
    dN = _deg(quotient(L, N)[0], cap)
    dM = _deg(quotient(L, M)[0], cap)
    return [Check("quotient_monotonicity", dN <= dM, dN, "<=", dM)]


def all_passed(checks: list[Check]) -> bool:
    return all(c.passed for c in checks)
