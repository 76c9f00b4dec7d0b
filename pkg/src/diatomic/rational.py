"""Nonnegative exact rationals extended with a single point at infinity.

Infinity is the canonical pair 1/0; it is an ordinary value here because
the assembly map sends 1 to it and the Moebius action moves it around.
0/0 can never be formed: every constructor and operation rejects it.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DomainError, OutOfRange


class ExtRational:
    """Immutable num/den pair, gcd-reduced, den == 0 encodes infinity."""

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        if num < 0 or den < 0:
            raise OutOfRange(f"negative component {num}/{den}")
        if num == 0 and den == 0:
            raise DomainError("0/0 is not a value")
        g = gcd(num, den)
        object.__setattr__(self, "num", num // g)
        object.__setattr__(self, "den", den // g)

    def __setattr__(self, *_):
        raise AttributeError("ExtRational is immutable")

    @classmethod
    def infinity(cls) -> "ExtRational":
        return cls(1, 0)

    @classmethod
    def from_fraction(cls, f: Fraction) -> "ExtRational":
        return cls(f.numerator, f.denominator)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinite:
            raise DomainError("infinity has no Fraction form")
        return Fraction(self.num, self.den)

    def reciprocal(self) -> "ExtRational":
        return ExtRational(self.den, self.num)

    def __add__(self, other: "ExtRational") -> "ExtRational":
        if self.is_infinite or other.is_infinite:
            return ExtRational.infinity()
        return ExtRational(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "ExtRational") -> "ExtRational":
        # only the monotone direction is meaningful in this domain
        if self.is_infinite:
            if other.is_infinite:
                raise DomainError("infinity - infinity")
            return ExtRational.infinity()
        n = self.num * other.den - other.num * self.den
        if n < 0:
            raise OutOfRange("difference would be negative")
        return ExtRational(n, self.den * other.den)

    def __mul__(self, other: "ExtRational") -> "ExtRational":
        return ExtRational(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "ExtRational") -> "ExtRational":
        return ExtRational(self.num * other.den, self.den * other.num)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtRational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __lt__(self, other: "ExtRational") -> bool:
        return self.num * other.den < other.num * self.den

    def __le__(self, other: "ExtRational") -> bool:
        return self.num * other.den <= other.num * self.den

    def __gt__(self, other: "ExtRational") -> bool:
        return other < self

    def __ge__(self, other: "ExtRational") -> bool:
        return other <= self

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"ExtRational({self.num}, {self.den})"

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"


def parse_ratio(text: str) -> ExtRational:
    """Parse 'a/b', a bare integer, or 'inf'."""
    text = text.strip()
    if text == "inf":
        return ExtRational.infinity()
    num, slash, den = text.partition("/")
    try:
        if slash:
            return ExtRational(int(num), int(den))
        return ExtRational(int(num))
    except ValueError as exc:
        raise DomainError(f"bad rational {text!r}") from exc


def parse_fraction(text: str) -> Fraction:
    """Parse 'a/b' or a bare integer as a finite exact fraction."""
    r = parse_ratio(text)
    return r.as_fraction()
