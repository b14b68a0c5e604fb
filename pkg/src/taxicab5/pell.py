"""Pell numbers and the integer-vs-conjugate-pair family of fifth-power solutions.

Member k of the family is::

    (P + 1)^5 + (P - 1)^5 = (P + iQ)^5 + (P - iQ)^5,   P = P_{2k}, Q = P_{2k} + P_{2k-1}

and it holds because ``Q^2 - 2 P^2 = 1`` (see :func:`th1_gap`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .gaussint import GaussInt
from .quadruple import Quadruple, verify_solution

__all__ = [
    "PellState",
    "Quadruple",
    "half_companion",
    "pell",
    "pell_states",
    "th1_family",
    "th1_gap",
    "th1_gap_closed_form",
    "verify_solution",
]


@dataclass(frozen=True)
class PellState:
    index: int
    prev: int
    curr: int

    def advance(self) -> PellState:
        return PellState(self.index + 1, self.curr, 2 * self.curr + self.prev)


def pell_states() -> Iterator[PellState]:
    """Yield (P_{n-1}, P_n) for n = 1, 2, ... forever."""
    state = PellState(1, 0, 1)
    while True:
        yield state
        state = state.advance()


def pell(n: int) -> int:
    if n < 0:
        raise ValueError("pell index must be non-negative")
    prev, curr = 1, 0  # P_{-1}, P_0
    for _ in range(n):
        prev, curr = curr, 2 * curr + prev
    return curr


def half_companion(k: int) -> int:
    """Q_k = P_{2k} + P_{2k-1}, the x in x^2 - 2 P_{2k}^2 = 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return pell(2 * k) + pell(2 * k - 1)


def th1_family(k: int) -> Quadruple:
    if k < 1:
        raise ValueError("k must be >= 1")
    p = pell(2 * k)
    y = GaussInt(p, half_companion(k))
    return Quadruple(GaussInt(p + 1), GaussInt(p - 1), y, y.conj(), 5)


def th1_gap(a: int, b: int, c: int) -> GaussInt:
    """(a+b)^5 + (a-b)^5 - (a+ic)^5 - (a-ic)^5, evaluated exactly."""
    ga = GaussInt(a)
    gb = GaussInt(b)
    ic = GaussInt(0, c)
    return (ga + gb) ** 5 + (ga - gb) ** 5 - (ga + ic) ** 5 - (ga - ic) ** 5


def th1_gap_closed_form(a: int, b: int, c: int) -> int:
    # zero iff a == 0, b == c == 0, or c^2 - 2a^2 == b^2
    return 10 * a * (b * b + c * c) * (2 * a * a + b * b - c * c)
