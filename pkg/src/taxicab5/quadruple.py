"""Candidate solutions of w^e + x^e = y^e + z^e."""

from __future__ import annotations

from dataclasses import dataclass, field

from .gaussint import GaussInt, IntLike


@dataclass(frozen=True)
class Quadruple:
    """Ordered candidate ``(w, x, y, z)``; only ``verify_solution`` says it is a solution."""

    w: GaussInt
    x: GaussInt
    y: GaussInt
    z: GaussInt
    exponent: int = field(default=5)

    def __post_init__(self) -> None:
        for name in "wxyz":
            object.__setattr__(self, name, GaussInt.coerce(getattr(self, name)))
        if type(self.exponent) is not int or self.exponent < 1:
            raise ValueError(f"exponent must be a positive int, got {self.exponent!r}")

    @classmethod
    def of(cls, w: IntLike, x: IntLike, y: IntLike, z: IntLike, exponent: int = 5) -> Quadruple:
        return cls(w, x, y, z, exponent)

    def terms(self) -> tuple[GaussInt, GaussInt, GaussInt, GaussInt]:
        return (self.w, self.x, self.y, self.z)

    def lhs(self) -> GaussInt:
        return self.w ** self.exponent + self.x ** self.exponent

    def rhs(self) -> GaussInt:
        return self.y ** self.exponent + self.z ** self.exponent

    def key(self) -> tuple[int, ...]:
        """The 8-tuple of components; its lexicographic order is the total order on quadruples."""
        return (self.w.re, self.w.im, self.x.re, self.x.im,
                self.y.re, self.y.im, self.z.re, self.z.im)

    def is_trivial(self) -> bool:
        """True when {w, x} and {y, z} are the same unordered pair."""
        return sorted((self.w.key(), self.x.key())) == sorted((self.y.key(), self.z.key()))

    def __str__(self) -> str:
        e = self.exponent

        def term(g: GaussInt) -> str:
            if g.im == 0 and g.re >= 0:
                return f"{g}^{e}"
            return f"({g})^{e}"

        return f"{term(self.w)} + {term(self.x)} = {term(self.y)} + {term(self.z)}"


def verify_solution(q: Quadruple) -> bool:
    return q.lhs() == q.rhs()
