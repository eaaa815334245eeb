"""Descent and ascent statistics of 2 x n tableaux.

A value doubled in both rows counts at most once per statistic; if i and i+1
are both doubled, i is a descent and an ascent at the same time.  Only the
row sets matter, never column positions.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .tableaux import Tableau


@dataclass(frozen=True)
class StatProfile:
    descents: frozenset[int]
    ascents: frozenset[int]
    maj: int
    amaj: int

    def to_dict(self) -> dict:
        return {
            "descents": sorted(self.descents),
            "ascents": sorted(self.ascents),
            "maj": self.maj,
            "amaj": self.amaj,
        }


def descents_of_rows(row1: Iterable[int], row2: Iterable[int]) -> set[int]:
    """{i : i in row 1 and i + 1 in row 2}."""
    lower = set(row2)
    return {i for i in row1 if i + 1 in lower}


def ascents_of_rows(row1: Iterable[int], row2: Iterable[int]) -> set[int]:
    upper = set(row1)
    return {i for i in row2 if i + 1 in upper}


def descent_set(t: Tableau) -> set[int]:
    return descents_of_rows(t.row1, t.row2)


def ascent_set(t: Tableau) -> set[int]:
    return ascents_of_rows(t.row1, t.row2)


def maj(t: Tableau) -> int:
    return sum(descent_set(t))


def amaj(t: Tableau) -> int:
    return sum(ascent_set(t))


def profile(t: Tableau) -> StatProfile:
    d, a = descent_set(t), ascent_set(t)
    return StatProfile(frozenset(d), frozenset(a), sum(d), sum(a))
