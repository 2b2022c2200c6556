"""Computations with finite categories: envelopes, quotients, adjunctions and monads."""
from .core import (
    FinCat,
    Functor,
    HomRetraction,
    NatTrans,
    Semifunctor,
    Verdict,
    compose_functors,
    hom_set,
    identity_functor,
    identity_nat,
    nat_vertical,
    nat_whisker,
    opposite,
    validate_category,
)
from .errors import BudgetExceeded, FinCatError, ValidationError

__all__ = [
    "BudgetExceeded", "FinCat", "FinCatError", "Functor", "HomRetraction", "NatTrans",
    "Semifunctor", "ValidationError", "Verdict", "compose_functors", "hom_set",
    "identity_functor", "identity_nat", "nat_vertical", "nat_whisker", "opposite",
    "validate_category",
]
