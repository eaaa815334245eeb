"""Tableaux of shape 2 x n with strictly increasing rows, and SYT of any shape.

Enumeration order for 2 x n families is lexicographic on (row 1, row 2).
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import InputError

Rows = tuple[tuple[int, ...], tuple[int, ...]]


class TableauClass(enum.Enum):
    INVALID = "Invalid"
    ROW_INCREASING = "RowIncreasing"
    INCREASING = "Increasing"
    SYT = "SYT"


def _violation(row1: Sequence[int], row2: Sequence[int], m: int) -> str | None:
    """Name the first broken invariant, or None when (row1, row2, m) is a valid tableau."""
    n = len(row1)
    if n != len(row2):
        return "rows must have equal length"
    if n < 1:
        return "tableau must have at least one column"
    if m < 0:
        return "offset m must be nonnegative"
    for row_no, row in ((1, row1), (2, row2)):
        for a, b in zip(row, row[1:]):
            if a >= b:
                return f"row {row_no} is not strictly increasing ({a} >= {b})"
    for j, (top, bottom) in enumerate(zip(row1, row2), start=1):
        if top > bottom:
            return f"column {j} is not weakly increasing ({top} > {bottom})"
    values = set(row1) | set(row2)
    k = 2 * n - len(values)
    expected = set(range(m + 1, m + 2 * n - k + 1))
    if values != expected:
        return f"entries are not the consecutive segment {m + 1}..{m + 2 * n - k}"
    return None


@dataclass(frozen=True)
class Tableau:
    """A 2 x n row-increasing tableau with entries {m+1, ..., m+2n-k}.

    ``k`` (the number of doubled values) is inferred from the entries.
    Construction validates every invariant and raises InputError otherwise.
    """

    rows: Rows
    m: int = 0
    k: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        row1, row2 = (tuple(int(x) for x in r) for r in self.rows)
        problem = _violation(row1, row2, self.m)
        if problem is not None:
            raise InputError(problem)
        object.__setattr__(self, "rows", (row1, row2))
        object.__setattr__(self, "k", 2 * len(row1) - len(set(row1) | set(row2)))

    @classmethod
    def _trusted(cls, row1: tuple[int, ...], row2: tuple[int, ...], m: int, k: int) -> Tableau:
        # Skips validation; only for generators that construct valid tableaux.
        t = object.__new__(cls)
        object.__setattr__(t, "rows", (row1, row2))
        object.__setattr__(t, "m", m)
        object.__setattr__(t, "k", k)
        return t

    @classmethod
    def from_rows(cls, row1: Sequence[int], row2: Sequence[int], m: int | None = None) -> Tableau:
        """Build a tableau; the offset defaults to (smallest entry - 1)."""
        if m is None:
            if not row1:
                raise InputError("tableau must have at least one column")
            m = min(min(row1), min(row2, default=row1[0])) - 1
        return cls((tuple(row1), tuple(row2)), m)

    @property
    def row1(self) -> tuple[int, ...]:
        return self.rows[0]

    @property
    def row2(self) -> tuple[int, ...]:
        return self.rows[1]

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def top(self) -> int:
        """Largest entry, m + 2n - k."""
        return self.m + 2 * self.n - self.k

    def doubled(self) -> list[int]:
        """Values appearing in both rows, ascending."""
        return sorted(set(self.row1) & set(self.row2))

    def has_equal_column(self) -> bool:
        return any(a == b for a, b in zip(*self.rows))

    def to_text(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.rows) + "\n"

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "m": self.m, "rows": [list(self.row1), list(self.row2)]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.row1)) + ";" + ",".join(map(str, self.row2)) + "]"


def parse_text(text: str) -> Tableau:
    """Parse two whitespace-separated integer lines (row 1 first)."""
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) != 2:
        raise InputError(f"expected exactly 2 non-empty lines, got {len(lines)}")
    try:
        row1, row2 = ([int(tok) for tok in ln.split()] for ln in lines)
    except ValueError as exc:
        raise InputError(f"non-integer entry: {exc}") from None
    if len(row1) != len(row2):
        raise InputError("rows must have equal length")
    return Tableau.from_rows(row1, row2)


def parse_json(text: str | dict) -> Tableau:
    data = json.loads(text) if isinstance(text, str) else text
    try:
        rows = data["rows"]
        row1, row2 = rows
    except (KeyError, TypeError, ValueError):
        raise InputError('JSON tableau needs "rows": [[...], [...]]') from None
    m = data.get("m")
    t = Tableau.from_rows(row1, row2, m)
    for key in ("n", "k"):
        if key in data and data[key] != getattr(t, key):
            raise InputError(f'declared {key}={data[key]} but the rows give {key}={getattr(t, key)}')
    return t


def parse_tableau(text: str) -> Tableau:
    """Parse either the JSON or the two-line text format."""
    if text.lstrip().startswith("{"):
        try:
            return parse_json(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad JSON: {exc}") from None
    return parse_text(text)


def classify(row1: Sequence[int], row2: Sequence[int], m: int = 0) -> TableauClass:
    if len(row1) != len(row2):
        raise InputError("rows must have equal length")
    if _violation(row1, row2, m) is not None:
        return TableauClass.INVALID
    if any(a == b for a, b in zip(row1, row2)):
        return TableauClass.ROW_INCREASING
    if set(row1) & set(row2):
        return TableauClass.INCREASING
    return TableauClass.SYT


def _check_nm(n: int, m: int) -> None:
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    if m < 0:
        raise InputError(f"m must be nonnegative, got {m}")


def _first_rows(n: int, k: int, m: int) -> Iterator[tuple[int, ...]]:
    # Row-1 sets in lexicographic order. Values skipped by row 1 are forced into
    # row 2, so every prefix must keep #row1 >= #(forced row-2 values).
    hi = m + 2 * n - k
    row: list[int] = []

    def rec(prev: int, forced: int) -> Iterator[tuple[int, ...]]:
        j = len(row)
        if j == n:
            yield tuple(row)
            return
        for v in range(prev + 1, hi - (n - j - 1) + 1):
            skipped = v - prev - 1
            if forced + skipped > j or forced + skipped > n - k:
                break
            row.append(v)
            yield from rec(v, forced + skipped)
            row.pop()

    yield from rec(m, 0)


def _second_rows(row1: tuple[int, ...], k: int, hi: int, strict: bool) -> Iterator[tuple[int, ...]]:
    n = len(row1)
    in_row1 = set(row1)
    forced = [v for v in range(row1[0], hi + 1) if v not in in_row1]
    row: list[int] = []

    def rec(prev: int, ci: int, used: int) -> Iterator[tuple[int, ...]]:
        j = len(row)
        if j == n:
            if ci == len(forced):
                yield tuple(row)
            return
        low = max(prev + 1, row1[j] + 1 if strict else row1[j])
        # A forced value may never be skipped.
        high = forced[ci] if ci < len(forced) else hi
        left = n - j - 1
        for v in range(low, high + 1):
            if ci < len(forced) and v == forced[ci]:
                nci, nused = ci + 1, used
            elif v in in_row1 and used < k:
                nci, nused = ci, used + 1
            else:
                continue
            rem = len(forced) - nci
            if rem > left or left - rem > k - nused:
                continue
            row.append(v)
            yield from rec(v, nci, nused)
            row.pop()

    yield from rec(row1[0] - 1, 0, 0)


def _enumerate(n: int, k: int, m: int, strict: bool) -> Iterator[Tableau]:
    hi = m + 2 * n - k
    for row1 in _first_rows(n, k, m):
        for row2 in _second_rows(row1, k, hi, strict):
            yield Tableau._trusted(row1, row2, m, k)


def enumerate_rinc(n: int, k: int, m: int = 0) -> Iterator[Tableau]:
    """Yield RInc^m_k(2 x n) in lexicographic order on (row 1, row 2).

    Out-of-range k gives an empty stream.
    """
    _check_nm(n, m)
    if not 0 <= k <= n:
        return iter(())
    return _enumerate(n, k, m, strict=False)


def enumerate_inc(n: int, k: int, m: int = 0) -> Iterator[Tableau]:
    """Yield Inc_k(2 x n) (strict columns), same order as enumerate_rinc."""
    _check_nm(n, m)
    if not 0 <= k <= n - 1:
        return iter(())
    return _enumerate(n, k, m, strict=True)


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise InputError("partition parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InputError("partition parts must be weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse a comma-separated list such as ``3,3,1,1``."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(tok) for tok in text.split(",")))
        except ValueError:
            raise InputError(f"bad partition {text!r}") from None

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0])))

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self.parts):
            for j in range(p):
                yield i, j

    def __len__(self) -> int:
        return len(self.parts)


def partitions(size: int) -> Iterator[Partition]:
    """All partitions of ``size`` in reverse lexicographic order."""

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for p in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - p, p):
                yield (p,) + rest

    for parts in rec(size, size):
        yield Partition(parts)


@dataclass(frozen=True)
class GeneralTableau:
    shape: Partition
    cells: tuple[tuple[int, ...], ...]

    def descents(self) -> set[int]:
        """i such that i + 1 sits in a strictly lower row."""
        row_of = {v: r for r, row in enumerate(self.cells) for v in row}
        return {i for i in row_of if i + 1 in row_of and row_of[i + 1] > row_of[i]}

    def maj(self) -> int:
        return sum(self.descents())


def enumerate_syt(shape: Partition) -> Iterator[GeneralTableau]:
    """Yield every standard Young tableau of ``shape``.

    Values 1, 2, ... are placed one at a time into the addable corner cells,
    trying rows top to bottom, so the order is deterministic.
    """
    parts = shape.parts
    total = shape.size
    rows: list[list[int]] = [[] for _ in parts]

    def rec(v: int) -> Iterator[GeneralTableau]:
        if v > total:
            yield GeneralTableau(shape, tuple(tuple(r) for r in rows))
            return
        for i, row in enumerate(rows):
            if len(row) < parts[i] and (i == 0 or len(rows[i - 1]) > len(row)):
                row.append(v)
                yield from rec(v + 1)
                row.pop()

    yield from rec(1)
