"""Exact Gaussian integers with arbitrary-precision components.

Values are immutable.  Components are plain Python ints, so nothing ever
overflows; there is deliberately no float path anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

IntLike = Union[int, "GaussInt"]

_REAL = re.compile(r"([+-]?\d+)")
_FULL = re.compile(r"([+-]?\d+)([+-])(\d+)i")
_IMAG = re.compile(r"([+-]?\d+)i")


@dataclass(frozen=True, slots=True)
class GaussInt:
    re: int = 0
    im: int = 0

    def __post_init__(self) -> None:
        # bool is an int subclass; reject it along with floats etc.
        for v in (self.re, self.im):
            if type(v) is not int:
                raise TypeError(f"GaussInt components must be int, got {type(v).__name__}")

    @classmethod
    def coerce(cls, v: IntLike) -> GaussInt:
        if isinstance(v, GaussInt):
            return v
        if type(v) is int:
            return cls(v, 0)
        raise TypeError(f"cannot convert {type(v).__name__} to GaussInt")

    @classmethod
    def parse(cls, text: str) -> GaussInt:
        """Parse ``"3"``, ``"-5"``, ``"2+3i"``, ``"2-3i"`` or ``"-597i"``."""
        s = text.strip()
        if m := _REAL.fullmatch(s):
            return cls(int(m[1]), 0)
        if m := _FULL.fullmatch(s):
            im = int(m[3])
            return cls(int(m[1]), -im if m[2] == "-" else im)
        if m := _IMAG.fullmatch(s):
            return cls(0, int(m[1]))
        raise ValueError(f"not a Gaussian integer: {text!r}")

    @classmethod
    def from_json(cls, obj: dict) -> GaussInt:
        return cls(int(obj["re"]), int(obj["im"]))

    def to_json(self) -> dict[str, str]:
        return {"re": str(self.re), "im": str(self.im)}

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self) -> str:
        return f"GaussInt({self.re}, {self.im})"

    def key(self) -> tuple[int, int]:
        """Sort key for the fixed total order on Gaussian integers."""
        return (self.re, self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __neg__(self) -> GaussInt:
        return GaussInt(-self.re, -self.im)

    def __add__(self, other: IntLike) -> GaussInt:
        if not isinstance(other, (GaussInt, int)):
            return NotImplemented
        o = GaussInt.coerce(other)
        return GaussInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: IntLike) -> GaussInt:
        if not isinstance(other, (GaussInt, int)):
            return NotImplemented
        o = GaussInt.coerce(other)
        return GaussInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: IntLike) -> GaussInt:
        if not isinstance(other, (GaussInt, int)):
            return NotImplemented
        return GaussInt.coerce(other) - self

    def __mul__(self, other: IntLike) -> GaussInt:
        if not isinstance(other, (GaussInt, int)):
            return NotImplemented
        o = GaussInt.coerce(other)
        a, b, c, d = self.re, self.im, o.re, o.im
        return GaussInt(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> GaussInt:
        if type(n) is not int:
            return NotImplemented
        if n < 0:
            raise ValueError("negative exponent")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conj(self) -> GaussInt:
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def canonical_associate(self) -> tuple[GaussInt, int]:
        return canonical_associate(self)


ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)
I = GaussInt(0, 1)
UNITS = (ONE, I, GaussInt(-1, 0), GaussInt(0, -1))  # UNITS[k] == I**k


def conj(z: IntLike) -> GaussInt:
    return GaussInt.coerce(z).conj()


def norm(z: IntLike) -> int:
    return GaussInt.coerce(z).norm()


def canonical_associate(z: IntLike) -> tuple[GaussInt, int]:
    """Return ``(i**k * z, k)`` with the result in ``{re > 0, im >= 0}``.

    Exactly one of the four associates of a nonzero value lies in that
    half-open quadrant, so the answer is unique.  Zero raises ValueError.
    """
    z = GaussInt.coerce(z)
    if not z:
        raise ValueError("zero has no canonical associate")
    for k, u in enumerate(UNITS):
        w = u * z
        if w.re > 0 and w.im >= 0:
            return w, k
    raise AssertionError("unreachable")  # pragma: no cover
