"""Exception types raised across the package."""

from __future__ import annotations


class OrbitCodeError(Exception):
    """Base class for every error raised by orbitcodes."""


class FieldConstructionError(OrbitCodeError):
    pass


class NotIrreducible(FieldConstructionError):
    pass


class NotPrimitive(FieldConstructionError):
    pass


class DegreeMismatch(FieldConstructionError):
    pass


class MissingConwayPolynomial(FieldConstructionError):
    pass


class DivisionByZero(OrbitCodeError, ZeroDivisionError):
    pass


class InvalidSubfield(OrbitCodeError, ValueError):
    pass


class AmbientMismatch(OrbitCodeError, ValueError):
    pass


class TowerMismatch(OrbitCodeError, ValueError):
    pass


class ZeroGenerator(OrbitCodeError, ValueError):
    pass


class ZeroShift(OrbitCodeError, ValueError):
    pass


class AlphaInBaseField(OrbitCodeError, ValueError):
    pass


class NotFullLength(OrbitCodeError, ValueError):
    pass


class BudgetExceeded(OrbitCodeError):
    def __init__(self, required: int, budget: int):
        super().__init__(
            f"orbit of size {required} exceeds the enumeration budget {budget}; "
            "raise the budget explicitly to run it"
        )
        self.required = required
        self.budget = budget


class OracleScaleExceeded(OrbitCodeError):
    pass


class UnknownCheck(OrbitCodeError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown check"


class DSLSyntaxError(OrbitCodeError, ValueError):
    """Malformed subspace expression; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, text: str, position: int):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(self.pretty())

    def pretty(self) -> str:
        return f"{self.message} at position {self.position}\n  {self.text}\n  {' ' * self.position}^"
