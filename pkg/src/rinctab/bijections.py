"""Bijections on 2 x n row-increasing tableaux and their inverses.

``f_map``   RInc_k \\ Inc_k -> Inc_{k-1}   (unglue the leftmost equal column)
``g_map``   prime RInc^m_k -> RInc^m_k      (swap doubled values for their row-2 left neighbours)
``phi``     RInc_k -> RInc_k               (g applied blockwise over the prime decomposition)

Columns are 1-based in docstrings and 0-based in code.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InputError
from .stats import ascents_of_rows, descents_of_rows
from .tableaux import Tableau


def _require_global(t: Tableau, what: str) -> None:
    if t.m != 0:
        raise DomainError(f"{what} needs entries starting at 1 (m=0), got m={t.m}")


def _build(row1, row2, m: int, what: str) -> Tableau:
    try:
        return Tableau((tuple(row1), tuple(row2)), m)
    except InputError as exc:
        raise DomainError(f"{what} produced an invalid tableau: {exc}") from None


def f_map(t: Tableau) -> Tableau:
    """Delete row-2 entry of the leftmost equal column, close the gap, append 2n-k+1."""
    _require_global(t, "f")
    row1, row2 = t.rows
    j = next((i for i, (a, b) in enumerate(zip(row1, row2)) if a == b), None)
    if j is None:
        raise DomainError(f"f needs a column with equal entries: {t}")
    new2 = row2[:j] + row2[j + 1:] + (2 * t.n - t.k + 1,)
    return Tableau((row1, new2), 0)


def f_inv(s: Tableau) -> Tableau:
    _require_global(s, "f inverse")
    if s.has_equal_column():
        raise DomainError(f"f inverse needs an increasing tableau: {s}")
    row1, row2 = s.rows
    n = s.n
    # rightmost column j (1-based) with S[1][j+1] == S[2][j] + 1, else 0
    j = 0
    for c in range(n - 1, 0, -1):
        if row1[c] == row2[c - 1] + 1:
            j = c
            break
    new2 = row2[:j] + (row1[j],) + row2[j:n - 1]
    return Tableau((row1, new2), 0)


def is_prime(t: Tableau) -> bool:
    """Whenever T[1][j+1] == T[2][j] + 1, the value T[2][j+1] must also sit in row 1."""
    row1, row2 = t.rows
    upper = set(row1)
    return all(
        row2[j + 1] in upper
        for j in range(t.n - 1)
        if row1[j + 1] == row2[j] + 1
    )


@dataclass(frozen=True)
class PrimeDecomposition:
    blocks: tuple[Tableau, ...]
    boundaries: tuple[int, ...]  # cut after these 1-based columns

    @property
    def params(self) -> list[tuple[int, int, int]]:
        """(m_j, n_j, k_j) of every block."""
        return [(b.m, b.n, b.k) for b in self.blocks]

    def concatenate(self) -> Tableau:
        return concatenate(self.blocks)


def concatenate(blocks) -> Tableau:
    row1 = tuple(v for b in blocks for v in b.row1)
    row2 = tuple(v for b in blocks for v in b.row2)
    return Tableau((row1, row2), blocks[0].m)


def _split(t: Tableau, cuts: list[int]) -> tuple[Tableau, ...]:
    row1, row2 = t.rows
    edges = [0] + cuts + [t.n]
    return tuple(
        Tableau.from_rows(row1[a:b], row2[a:b]) for a, b in zip(edges, edges[1:])
    )


def prime_decompose(t: Tableau) -> PrimeDecomposition:
    """Cut after column i when T[2][i] + 1 == T[1][i+1] and T[2][i+1] occurs only once."""
    row1, row2 = t.rows
    upper = set(row1)
    cuts = [
        i + 1
        for i in range(t.n - 1)
        if row2[i] + 1 == row1[i + 1] and row2[i + 1] not in upper
    ]
    return PrimeDecomposition(_split(t, cuts), tuple(cuts))


def _swap_sets(t: Tableau) -> tuple[list[int], list[int]]:
    # A = doubled values; B = cyclic left neighbour in row 2 of each a in A.
    row2 = t.row2
    pos = {v: i for i, v in enumerate(row2)}
    a_set = t.doubled()
    b_set = [row2[pos[a] - 1] for a in a_set]  # index -1 wraps to T[2][n]
    return a_set, b_set


def g_map(t: Tableau) -> Tableau:
    """Replace the doubled values in row 1 by their cyclic left neighbours in row 2."""
    if not is_prime(t):
        raise DomainError(f"g needs a prime tableau: {t}")
    a_set, b_set = _swap_sets(t)
    removed = set(a_set)
    new1 = sorted([v for v in t.row1 if v not in removed] + b_set)
    return _build(new1, t.row2, t.m, "g")


def g_inv(s: Tableau) -> Tableau:
    """Doubled values of the image are B; their cyclic right neighbours in row 2 recover A."""
    row2 = s.row2
    n = s.n
    pos = {v: i for i, v in enumerate(row2)}
    b_set = s.doubled()
    a_set = [row2[(pos[b] + 1) % n] for b in b_set]
    removed = set(b_set)
    new1 = sorted([v for v in s.row1 if v not in removed] + a_set)
    if len(set(new1)) != n:
        raise DomainError(f"not in the image of g: {s}")
    t = _build(new1, row2, s.m, "g inverse")
    if not is_prime(t) or g_map(t) != s:
        raise DomainError(f"not in the image of g: {s}")
    return t


@dataclass(frozen=True)
class SkewProfile:
    """Statistics of the skew tableau T0 (row 1 of T with the doubled values removed)."""

    descents0: frozenset[int]
    ascents0: frozenset[int]
    d: int
    X: tuple[int, ...]
    Y: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "descents0": sorted(self.descents0),
            "ascents0": sorted(self.ascents0),
            "d": self.d,
            "X": list(self.X),
            "Y": list(self.Y),
        }


def skew_rows(t: Tableau) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Row sets of T0; row 1 is right-justified, so only membership matters."""
    doubled = set(t.doubled())
    return tuple(v for v in t.row1 if v not in doubled), t.row2


def skew_profile(t: Tableau) -> SkewProfile:
    if not is_prime(t):
        raise DomainError(f"skew profile needs a prime tableau: {t}")
    top, bottom = skew_rows(t)
    des = descents_of_rows(top, bottom)
    asc = ascents_of_rows(top, bottom)
    # X: positions within the shortened row 1 (column k + x); Y: row-2 columns.
    xs = tuple(i for i, v in enumerate(top, start=1) if v in des)
    ys = tuple(i for i, v in enumerate(bottom, start=1) if v in asc)
    return SkewProfile(frozenset(des), frozenset(asc), len(des), xs, ys)


def phi(t: Tableau) -> Tableau:
    """Apply g to every prime block; row 2 is left untouched and maj(phi(T)) = amaj(T) + n - k."""
    _require_global(t, "phi")
    return concatenate([g_map(b) for b in prime_decompose(t).blocks])


def phi_cuts(s: Tableau) -> list[int]:
    """Block boundaries of an image of phi, found without knowing the preimage."""
    row1, row2 = s.rows
    j = max((c + 1 for c in range(s.n) if row1[c] == row2[c]), default=0)
    return [i for i in range(max(j, 1), s.n) if row1[i] > row2[i - 1]]


def phi_inv(s: Tableau) -> Tableau:
    _require_global(s, "phi inverse")
    return concatenate([g_inv(b) for b in _split(s, phi_cuts(s))])
