"""The four-term fifth-power identity and the Pythagorean-triple solution family.

For integers a, b, c::

    (a+b+ic)^5 + (a-b-ic)^5 - (a-b+ic)^5 - (a+b-ic)^5 = 80i * abc * (a^2 + b^2 - c^2)

The right side vanishes on Pythagorean triples, which turns each triple into
a Gaussian-integer solution of w^5 + x^5 = y^5 + z^5.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .gaussint import GaussInt
from .quadruple import Quadruple


@dataclass(frozen=True, order=True)
class PythTriple:
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c) < 1:
            raise ValueError(f"triple entries must be positive: {self}")
        if self.a * self.a + self.b * self.b != self.c * self.c:
            raise ValueError(f"not a Pythagorean triple: {(self.a, self.b, self.c)}")

    @property
    def primitive(self) -> bool:
        return gcd(self.a, self.b) == 1

    def astuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def _terms(a: int, b: int, c: int) -> tuple[GaussInt, GaussInt, GaussInt, GaussInt]:
    # (a+b+ic, a-b-ic, a+b-ic, a-b+ic)
    return (GaussInt(a + b, c), GaussInt(a - b, -c), GaussInt(a + b, -c), GaussInt(a - b, c))


def lemma_lhs(a: int, b: int, c: int) -> GaussInt:
    p, q, r, s = _terms(a, b, c)
    return p ** 5 + q ** 5 - s ** 5 - r ** 5


def lemma_rhs(a: int, b: int, c: int) -> GaussInt:
    return GaussInt(0, 80 * a * b * c * (a * a + b * b - c * c))


def enumerate_primitive_triples(max_c: int) -> list[PythTriple]:
    """All primitive triples with hypotenuse <= max_c, larger leg first.

    Sorted by c, then by a.
    """
    out = []
    for m in range(2, isqrt(max(max_c - 1, 0)) + 1):
        for n in range(1 + (m & 1), m, 2):  # m - n odd
            c = m * m + n * n
            if c > max_c:
                break
            if gcd(m, n) != 1:
                continue
            odd, even = m * m - n * n, 2 * m * n
            a, b = (odd, even) if odd > even else (even, odd)
            out.append(PythTriple(a, b, c))
    out.sort(key=lambda t: (t.c, t.a))
    return out


def th2_solution(t: PythTriple | tuple[int, int, int]) -> Quadruple:
    if not isinstance(t, PythTriple):
        t = PythTriple(*t)
    return Quadruple(*_terms(t.a, t.b, t.c), exponent=5)
