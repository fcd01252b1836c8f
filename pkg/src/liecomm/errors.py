"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class LieCommError(Exception):
    """Base class for all errors raised by liecomm."""


class NonPrimeModulus(LieCommError, ValueError):
    pass


class ReducibleModulus(LieCommError, ValueError):
    pass


class NoBuiltinModulus(LieCommError, ValueError):
    pass


class FieldMismatch(LieCommError, ValueError):
    pass


class DivisionByZero(LieCommError, ZeroDivisionError):
    pass


class AmbientMismatch(LieCommError, ValueError):
    pass


class DimensionMismatch(LieCommError, ValueError):
    pass


class NotContained(LieCommError, ValueError):
    pass


class SingularMatrix(LieCommError, ValueError):
    pass


class EnumerationCapExceeded(LieCommError, RuntimeError):
    pass


class IndexOutOfRange(LieCommError, ValueError):
    pass


class DuplicateEntry(LieCommError, ValueError):
    pass


class JacobiViolation(LieCommError, ValueError):
    """The structure constants break the Jacobi identity.

    ``triple`` and ``coordinate`` are 1-based, as in algebra files.
    """

    def __init__(self, triple: tuple[int, int, int], coordinate: int, value: int):
        self.triple = triple
        self.coordinate = coordinate
        self.value = value
        super().__init__(
            f"Jacobi identity fails on basis triple {triple} "
            f"at coordinate {coordinate} (value code {value})"
        )


class AlternatingViolation(LieCommError, ValueError):
    pass


class NotAnIdeal(LieCommError, ValueError):
    pass


class NotASubalgebra(LieCommError, ValueError):
    pass


class NotNested(LieCommError, ValueError):
    pass


class InvalidParams(LieCommError, ValueError):
    pass


class AbelianInput(LieCommError, ValueError):
    pass


class SingularWitness(LieCommError, ValueError):
    pass


class BudgetExceeded(LieCommError, RuntimeError):
    pass


class ParseError(LieCommError, ValueError):
    pass
