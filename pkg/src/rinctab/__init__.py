"""Row-increasing tableaux of shape 2 x n: enumeration, maj/amaj statistics,
q-analogues of the refined Schroeder numbers, and the bijections behind them."""

from .errors import DivisibilityError, DomainError, InputError
from .qpoly import QPoly
from .tableaux import Partition, Tableau, TableauClass, classify, enumerate_inc, enumerate_rinc, enumerate_syt

__all__ = [
    "DivisibilityError",
    "DomainError",
    "InputError",
    "Partition",
    "QPoly",
    "Tableau",
    "TableauClass",
    "classify",
    "enumerate_inc",
    "enumerate_rinc",
    "enumerate_syt",
]
