"""Schroeder paths, their {0,1,2} words, and the tableau <-> word bijection theta.

Steps: U = (0,1) <-> 0, F = (1,1) <-> 1, D = (1,0) <-> 2.  U is the vertical
step, so a valid path stays weakly above y = x.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import InputError
from .qpoly import QPoly, schroeder_core
from .tableaux import Tableau

STEP_TO_LETTER = {"U": "0", "F": "1", "D": "2"}
LETTER_TO_STEP = {v: k for k, v in STEP_TO_LETTER.items()}


def _check_letters(letters: str) -> None:
    if not letters:
        raise InputError("empty word")
    bad = set(letters) - {"0", "1", "2"}
    if bad:
        raise InputError(f"word letters must be 0, 1 or 2, got {sorted(bad)}")
    height = 0
    for i, c in enumerate(letters, start=1):
        if c == "0":
            height += 1
        elif c == "2":
            height -= 1
            if height < 0:
                raise InputError(f"prefix of length {i} has more 2s than 0s (path dips below the diagonal)")
    if height != 0:
        raise InputError("word must contain as many 0s as 2s")


@dataclass(frozen=True)
class SchroederWord:
    letters: str

    def __post_init__(self) -> None:
        _check_letters(self.letters)

    @property
    def k(self) -> int:
        return self.letters.count("1")

    @property
    def n(self) -> int:
        return (len(self.letters) + self.k) // 2

    def __str__(self) -> str:
        return self.letters


@dataclass(frozen=True)
class SchroederPath:
    steps: str

    def __post_init__(self) -> None:
        bad = set(self.steps) - set(STEP_TO_LETTER)
        if bad:
            raise InputError(f"path steps must be U, D or F, got {sorted(bad)}")
        x = y = 0
        for i, s in enumerate(self.steps, start=1):
            if s in "DF":
                x += 1
            if s in "UF":
                y += 1
            if y < x:
                raise InputError(f"path goes below the diagonal after step {i}")
        if not self.steps or x != y:
            raise InputError(f"path must end on the diagonal, ends at ({x},{y})")

    @property
    def n(self) -> int:
        return sum(1 for s in self.steps if s in "DF")

    def diagonal_flats(self) -> list[int]:
        """1-based indices of F steps that start on y = x."""
        out = []
        x = y = 0
        for i, s in enumerate(self.steps, start=1):
            if s == "F" and x == y:
                out.append(i)
            if s in "DF":
                x += 1
            if s in "UF":
                y += 1
        return out

    def __str__(self) -> str:
        return self.steps


def word_from_path(p: SchroederPath) -> SchroederWord:
    return SchroederWord("".join(STEP_TO_LETTER[s] for s in p.steps))


def path_from_word(w: SchroederWord) -> SchroederPath:
    return SchroederPath("".join(LETTER_TO_STEP[c] for c in w.letters))


def word_descents(w: SchroederWord) -> set[int]:
    s = w.letters
    return {i for i in range(1, len(s)) if s[i - 1] > s[i]}


def word_maj(w: SchroederWord) -> int:
    return sum(word_descents(w))


def theta(t: Tableau) -> SchroederWord:
    """Letter i is 0 (row 1 only), 2 (row 2 only) or 1 (both rows)."""
    if t.m != 0:
        raise InputError(f"theta needs m=0, got m={t.m}")
    upper, lower = set(t.row1), set(t.row2)
    letters = []
    for i in range(1, t.top + 1):
        if i in upper:
            letters.append("1" if i in lower else "0")
        else:
            letters.append("2")
    return SchroederWord("".join(letters))


def theta_inv(w: SchroederWord) -> Tableau:
    row1 = [i for i, c in enumerate(w.letters, start=1) if c in "01"]
    row2 = [i for i, c in enumerate(w.letters, start=1) if c in "12"]
    return Tableau((tuple(row1), tuple(row2)), 0)


def enumerate_words(n: int, k: int) -> Iterator[SchroederWord]:
    """All Schroeder words with semilength n and k ones, in lexicographic order."""
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    if not 0 <= k <= n:
        return
    ups = n - k
    buf: list[str] = []

    def rec(zeros: int, ones: int, twos: int) -> Iterator[str]:
        if zeros == ups and twos == ups and ones == k:
            yield "".join(buf)
            return
        if zeros < ups:
            buf.append("0")
            yield from rec(zeros + 1, ones, twos)
            buf.pop()
        if ones < k:
            buf.append("1")
            yield from rec(zeros, ones + 1, twos)
            buf.pop()
        if twos < zeros:
            buf.append("2")
            yield from rec(zeros, ones, twos + 1)
            buf.pop()

    for s in rec(0, 0, 0):
        yield SchroederWord(s)


def bonin_sum(n: int, k: int) -> QPoly:
    """[2n-k choose k] [2n-2k choose n-k] / [n-k+1]: q^maj summed over Schroeder words."""
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    if not 0 <= k <= n:
        raise InputError(f"need 0 <= k <= n, got n={n}, k={k}")
    return schroeder_core(n, k)


def parse_word(text: str) -> SchroederWord:
    return SchroederWord(text.strip())


def parse_path(text: str) -> SchroederPath:
    return SchroederPath("".join(text.split()).upper())
