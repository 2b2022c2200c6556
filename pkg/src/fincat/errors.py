"""Exception types shared by every module."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Diagnostic:
    """One violated law or malformed entry, with the offending ids or names."""

    kind: str
    detail: tuple = ()

    def to_json(self) -> dict:
        return {"kind": self.kind, "detail": [str(d) for d in self.detail]}

    def __str__(self) -> str:
        return f"{self.kind}({', '.join(map(str, self.detail))})"


class FinCatError(Exception):
    """Base class for everything raised by this package."""

    kind = "Error"


class ValidationError(FinCatError):
    kind = "ValidationError"

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        head = "; ".join(str(d) for d in self.diagnostics[:5])
        more = len(self.diagnostics) - 5
        super().__init__(head + (f" (+{more} more)" if more > 0 else ""))


class BoundaryMismatch(FinCatError):
    kind = "BoundaryMismatch"


class UnknownObject(FinCatError):
    kind = "UnknownObject"


class BudgetExceeded(FinCatError):
    kind = "BudgetExceeded"


class PreconditionFailed(FinCatError):
    kind = "PreconditionFailed"


class WitnessInvalid(FinCatError):
    kind = "WitnessInvalid"


class NotIdempotent(FinCatError):
    kind = "NotIdempotent"


class NotIdempotentNat(FinCatError):
    kind = "NotIdempotentNat"


class TriangleFailure(FinCatError):
    kind = "TriangleFailure"


class IsoNotFound(FinCatError):
    kind = "IsoNotFound"


class NotABasis(FinCatError):
    kind = "NotABasis"


class NotCentralIdempotent(FinCatError):
    kind = "NotCentralIdempotent"


class InternalInconsistency(FinCatError):
    """A construction produced data violating a law it must satisfy."""

    kind = "InternalInconsistency"
