"""Finite fields GF(p^k) in polynomial basis.

Elements are identified by a canonical integer code in ``[0, q)``: the
coefficient list ``(a_0, ..., a_{k-1})`` of the representative polynomial
``a_0 + a_1 X + ... + a_{k-1} X^{k-1}`` evaluated at ``p``.  Code 0 is the
additive identity and code 1 the multiplicative identity.

Moduli are coefficient lists in increasing degree order, so ``X^2 + X + 1``
is ``(1, 1, 1)`` and ``X^3 + X + 1`` over GF(2) is ``(1, 1, 0, 1)``.

The hot loops elsewhere in the package work on raw codes through the
``Field.add``/``Field.mul``/... methods; ``FieldElement`` is the typed
wrapper for interactive use.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

from .errors import (
    DivisionByZero,
    FieldMismatch,
    InvalidParams,
    NoBuiltinModulus,
    NonPrimeModulus,
    ReducibleModulus,
)

# First monic irreducible of each degree in code order of its lower coefficients.
BUILTIN_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 1, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (1, 1, 0, 1),
    (7, 2): (1, 0, 1),
    (7, 3): (2, 0, 0, 1),
    (11, 2): (1, 0, 1),
    (13, 2): (2, 0, 1),
    (17, 2): (3, 0, 1),
    (19, 2): (1, 0, 1),
}
BUILTIN_LIMIT = 512
TABLE_LIMIT = 512


class Tables(NamedTuple):
    add: list[list[int]]
    mul: list[list[int]]
    neg: list[int]
    inv: list[int]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` as ``p**k``; raise ``InvalidParams`` if it is not a prime power."""
    if q < 2:
        raise InvalidParams(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise InvalidParams(f"{q} is not a prime power")
    return p, k


def _poly_rem(a: list[int], b: Sequence[int], p: int) -> list[int]:
    # b is monic
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db:
        c = a[-1]
        if c:
            shift = len(a) - 1 - db
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bi) % p
        a.pop()
    return a


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_poly_rem(list(poly), low + (1,), p)):
                return False
    return True


@dataclass(frozen=True)
class Field:
    """The finite field GF(p^k); build instances with :func:`field_create`."""

    p: int
    k: int
    modulus: tuple[int, ...]
    q: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.k)

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}, modulus={list(self.modulus)})"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_prime(self) -> bool:
        return self.k == 1

    # -- code <-> coefficient conversion -------------------------------------

    def coeffs(self, code: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.k):
            code, r = divmod(code, p)
            out.append(r)
        return tuple(out)

    def encode(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.k:
            coeffs = _poly_rem([c % self.p for c in coeffs], self.modulus, self.p)
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + c % self.p
        return code

    def _poly_mul(self, a: int, b: int) -> int:
        x, y = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.k - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] += xi * yj
        return self.encode(prod)

    # -- lookup tables for extension fields ----------------------------------

    @functools.cached_property
    def _log_exp(self) -> tuple[list[int], list[int]]:
        q = self.q
        for g in range(2, q):
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self._poly_mul(x, g)
            if len(exp) == q - 1:
                log = [0] * q
                for i, v in enumerate(exp):
                    log[v] = i
                return log, exp
        raise AssertionError("no primitive element")  # pragma: no cover

    @functools.cached_property
    def _add_table(self) -> list[list[int]]:
        p = self.p
        digits = [self.coeffs(c) for c in range(self.q)]
        return [
            [self.encode([(x + y) % p for x, y in zip(da, db)]) for db in digits]
            for da in digits
        ]

    @functools.cached_property
    def _neg_table(self) -> list[int]:
        return [self.encode([-c for c in self.coeffs(a)]) for a in range(self.q)]

    @functools.cached_property
    def tables(self) -> Tables | None:
        """Full operation tables for q <= TABLE_LIMIT (None above), for hot loops."""
        q = self.q
        if q > TABLE_LIMIT:
            return None
        r = range(q)
        return Tables(
            add=[[self.add(a, b) for b in r] for a in r],
            mul=[[self.mul(a, b) for b in r] for a in r],
            neg=[self.neg(a) for a in r],
            inv=[0] + [self.inv(a) for a in range(1, q)],
        )

    # -- arithmetic on codes -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self._add_table[a][b]

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self._neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        log, exp = self._log_exp
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in {self!r}")
        if self.k == 1:
            return pow(a, -1, self.p)
        log, exp = self._log_exp
        return exp[-log[a] % (self.q - 1)]

    def power(self, a: int, e: int) -> int:
        if e < 0:
            return self.power(self.inv(a), -e)
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def from_int(self, n: int) -> int:
        """Code of the image of the integer ``n`` under Z -> GF(q)."""
        return n % self.p

    # -- elements --------------------------------------------------------------

    def __call__(self, code: int) -> FieldElement:
        if not 0 <= code < self.q:
            raise InvalidParams(f"code {code} out of range for {self!r}")
        return FieldElement(self, code)

    def codes(self) -> range:
        return range(self.q)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def to_json(self) -> dict:
        d = {"p": self.p, "k": self.k}
        if self.k > 1:
            d["modulus"] = list(self.modulus)
        return d


@functools.lru_cache(maxsize=None)
def _make_field(p: int, k: int, modulus: tuple[int, ...] | None) -> Field:
    if p < 2 or not is_prime(p):
        raise NonPrimeModulus(f"characteristic {p} is not prime")
    if k < 1:
        raise InvalidParams(f"extension degree must be >= 1, got {k}")
    if modulus is None:
        if k == 1:
            modulus = (0, 1)
        elif (p, k) in BUILTIN_MODULI:
            modulus = BUILTIN_MODULI[p, k]
        else:
            raise NoBuiltinModulus(
                f"no built-in modulus for GF({p}^{k}); supply one (table covers q <= {BUILTIN_LIMIT})"
            )
    else:
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ReducibleModulus(f"modulus {list(modulus)} is not monic of degree {k}")
        if any(not 0 <= c < p for c in modulus):
            raise InvalidParams(f"modulus coefficients must lie in [0, {p})")
        if not is_irreducible(modulus, p):
            raise ReducibleModulus(f"modulus {list(modulus)} factors over GF({p})")
    return Field(p, k, tuple(modulus))


def field_create(p: int, k: int = 1, modulus: Sequence[int] | None = None) -> Field:
    """Return the validated field GF(p^k).

    With ``modulus`` omitted and ``k > 1`` the built-in table is used.
    Fields are interned, so equal arguments give the identical object.
    """
    if modulus is None:
        # resolve the default first so explicit and implicit spellings intern together
        modulus = (0, 1) if k == 1 else BUILTIN_MODULI.get((p, k))
    return _make_field(p, k, None if modulus is None else tuple(modulus))


def GF(q: int, modulus: Sequence[int] | None = None) -> Field:
    """Shorthand: the field with ``q`` elements."""
    p, k = prime_power(q)
    return field_create(p, k, modulus)


def field_from_json(data: dict) -> Field:
    return field_create(int(data["p"]), int(data.get("k", 1)), data.get("modulus"))


@dataclass(frozen=True)
class FieldElement:
    field: Field
    code: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.code
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.code, b))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.code, self.field.inv(b)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.power(self.code, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.code))

    def __bool__(self):
        return self.code != 0

    def __int__(self):
        return self.code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.code)

    def __repr__(self):
        if self.field.k == 1:
            return str(self.code)
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
                coef = "" if (c == 1 and i) else str(c)
                terms.append(coef + mono)
        return "+".join(reversed(terms)) or "0"


def _check(a: FieldElement, b: FieldElement) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def enumerate_elements(F: Field) -> list[FieldElement]:
    """All elements in increasing code order, starting with zero."""
    return [FieldElement(F, c) for c in range(F.q)]


def iter_elements(F: Field) -> Iterator[FieldElement]:
    return (FieldElement(F, c) for c in range(F.q))
