"""Exact integer polynomials in q and the closed-form generating functions.

Coefficients are Python ints, so arithmetic never overflows.  Every closed
form is built as a product and then divided with a zero-remainder check.
"""
from __future__ import annotations

import json
import math
from functools import lru_cache
from typing import Iterable

from .errors import DivisibilityError, InputError
from .tableaux import Partition


class QPoly:
    """Immutable univariate polynomial; ``coeffs[i]`` is the coefficient of q^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> QPoly:
        if exponent < 0:
            raise InputError(f"negative exponent {exponent}")
        return cls([0] * exponent + [coeff])

    @classmethod
    def const(cls, c: int) -> QPoly:
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: QPoly | int) -> QPoly:
        if isinstance(other, int):
            other = QPoly.const(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return QPoly(self[i] + other[i] for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other: QPoly | int) -> QPoly:
        if isinstance(other, int):
            other = QPoly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> QPoly:
        return QPoly.const(other) - self

    def __mul__(self, other: QPoly | int) -> QPoly:
        if isinstance(other, int):
            return QPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def shift(self, e: int) -> QPoly:
        """Multiply by q^e (e >= 0)."""
        if e < 0:
            raise InputError(f"negative shift {e}")
        if not self.coeffs:
            return self
        return QPoly([0] * e + list(self.coeffs))

    def __call__(self, q: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def divmod(self, den: QPoly) -> tuple[QPoly, QPoly]:
        """Long division over the integers; the divisor's leading coefficient must divide exactly."""
        if not den.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = den.coeffs[-1]
        dd = den.degree
        quot = [0] * max(0, len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            if c % lead:
                raise DivisibilityError(f"leading coefficient {lead} does not divide {c}")
            f = c // lead
            quot[i - dd] = f
            for j, d in enumerate(den.coeffs):
                rem[i - dd + j] -= f * d
        return QPoly(quot), QPoly(rem)

    def to_dict(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> QPoly:
        return cls(json.loads(text)["coeffs"])

    def human(self) -> str:
        """Ascending powers, e.g. ``1 + q + 2q^2 - q^5``."""
        terms: list[str] = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not terms:
                terms.append(body if c > 0 else "-" + body)
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) if terms else "0"

    def __str__(self) -> str:
        return self.human()

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"


ZERO = QPoly()
ONE = QPoly.const(1)


def exact_div(num: QPoly, den: QPoly) -> QPoly:
    q, r = num.divmod(den)
    if r:
        raise DivisibilityError(f"({num}) / ({den}) leaves remainder {r}")
    return q


def q_int(n: int) -> QPoly:
    """[n] = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise InputError(f"q-integer needs n >= 0, got {n}")
    return QPoly([1] * n)


@lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> QPoly:
    """Gaussian binomial [a choose b] via [a,b] = [a-1,b-1] + q^b [a-1,b]."""
    if a < 0:
        raise InputError(f"q-binomial needs a >= 0, got {a}")
    if b < 0 or b > a:
        return ZERO
    if b == 0 or b == a:
        return ONE
    return q_binomial(a - 1, b - 1) + q_binomial(a - 1, b).shift(b)


def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise InputError(f"q-factorial needs n >= 0, got {n}")
    out = ONE
    for i in range(2, n + 1):
        out = out * q_int(i)
    return out


def hook_lengths(shape: Partition) -> list[int]:
    """Hook length (arm + leg + 1) of every cell, in row-major cell order."""
    conj = shape.conjugate().parts
    return [(shape.parts[i] - j - 1) + (conj[j] - i - 1) + 1 for i, j in shape.cells()]


def b_statistic(shape: Partition) -> int:
    return sum(i * p for i, p in enumerate(shape.parts))


def q_hook_maj_sum(shape: Partition) -> QPoly:
    """q^b(shape) [n]! / prod over cells of [hook]; the maj generating function of SYT(shape)."""
    den = ONE
    for h in hook_lengths(shape):
        den = den * q_int(h)
    return exact_div(q_factorial(shape.size), den).shift(b_statistic(shape))


def _check_n(n: int) -> None:
    if n < 1:
        raise InputError(f"n must be positive, got {n}")


def schroeder_core(n: int, k: int) -> QPoly:
    # [2n-k choose k] [2n-2k choose n-k] / [n-k+1], shared by R_q, R~_q and the Schroeder sum.
    if k < 0 or k > n:
        return ZERO
    return exact_div(q_binomial(2 * n - k, k) * q_binomial(2 * n - 2 * k, n - k), q_int(n - k + 1))


def formula_Cq(n: int) -> QPoly:
    """Sum of q^maj over SYT(2 x n)."""
    _check_n(n)
    return exact_div(q_binomial(2 * n, n), q_int(n + 1)).shift(n)


def formula_Ctq(n: int) -> QPoly:
    """Sum of q^amaj over SYT(2 x n)."""
    _check_n(n)
    return exact_div(q_binomial(2 * n, n), q_int(n + 1))


def formula_Sq(n: int, k: int) -> QPoly:
    """Sum of q^maj over Inc_k(2 x n); zero outside 0 <= k <= n-1."""
    _check_n(n)
    if k < 0 or k > n - 1:
        return ZERO
    num = q_binomial(n - 1, k) * q_binomial(2 * n - k, n)
    return exact_div(num, q_int(n + 1)).shift(n + k * (k + 1) // 2)


def formula_Rq(n: int, k: int) -> QPoly:
    """Sum of q^maj over RInc_k(2 x n); zero outside 0 <= k <= n."""
    _check_n(n)
    if k < 0 or k > n:
        return ZERO
    return schroeder_core(n, k).shift(n + k * (k - 3) // 2)


def formula_Rtq(n: int, k: int) -> QPoly:
    """Sum of q^amaj over RInc_k(2 x n); zero outside 0 <= k <= n."""
    _check_n(n)
    if k < 0 or k > n:
        return ZERO
    return schroeder_core(n, k).shift(k * (k - 1) // 2)


def count_s(n: int, k: int) -> int:
    """|Inc_k(2 x n)| = C(n-1,k) C(2n-k,n) / (n+1)."""
    _check_n(n)
    if k < 0 or k > n - 1:
        return 0
    num = math.comb(n - 1, k) * math.comb(2 * n - k, n)
    q, r = divmod(num, n + 1)
    if r:
        raise DivisibilityError(f"s({n},{k}) is not an integer")
    return q


def count_r(n: int, k: int) -> int:
    """|RInc_k(2 x n)| = C(2n-k,k) C(2n-2k,n-k) / (n-k+1)."""
    _check_n(n)
    if k < 0 or k > n:
        return 0
    num = math.comb(2 * n - k, k) * math.comb(2 * n - 2 * k, n - k)
    q, r = divmod(num, n - k + 1)
    if r:
        raise DivisibilityError(f"r({n},{k}) is not an integer")
    return q


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def recurrence_rhs_Rq(n: int, k: int) -> QPoly:
    """S_q(n,k) + S_q(n,k-1) + (1 - q^(2n-k)) (S_q(n-1,k-1) + S_q(n-1,k-2)), for 1 <= k < n."""
    if not 1 <= k < n:
        raise InputError(f"recurrence needs 1 <= k < n, got n={n}, k={k}")
    head = formula_Sq(n, k) + formula_Sq(n, k - 1)
    tail = formula_Sq(n - 1, k - 1) + formula_Sq(n - 1, k - 2)
    return head + (ONE - QPoly.monomial(2 * n - k)) * tail


def poly_sum(exponents: Iterable[int]) -> QPoly:
    """Sum of q^e over the given exponents."""
    counts: list[int] = []
    for e in exponents:
        if e >= len(counts):
            counts.extend([0] * (e + 1 - len(counts)))
        counts[e] += 1
    return QPoly(counts)


FORMULAS = {
    "Cq": formula_Cq,
    "Ctq": formula_Ctq,
    "Sq": formula_Sq,
    "Rq": formula_Rq,
    "Rtq": formula_Rtq,
}
