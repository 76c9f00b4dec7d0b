"""Periodic designs and the quadratic irrationals they evaluate to.

A purely periodic design with period {m}_n pins its value as the positive
root of  q3 X^2 - (q1 - q4) X - q2 = 0  built from the table quadruple at
(n, m); a preperiod conjugates that fixed point by an integer unimodular
matrix.  Exactness is kept throughout: roots are compared through integer
sign tests, never floats.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from ._backend import word_matrix
from .design import (
    FiniteDesign,
    PeriodicDesign,
    inverse_design,
    make_periodic,
    runs,
)
from .errors import InvalidPeriod, NonPositive, OutOfRange, PerfectSquare
from .rational import ExtRational
from .sdi import sdi_quadruple


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _sign_p_q_sqrt(p: int, q: int, d: int) -> int:
    """Sign of p + q*sqrt(d) for nonsquare d > 0."""
    if q == 0:
        return (p > 0) - (p < 0)
    if p == 0:
        return (q > 0) - (q < 0)
    if p > 0 and q > 0:
        return 1
    if p < 0 and q < 0:
        return -1
    # opposite signs: compare p^2 with q^2 d on the side of the positive term
    if p > 0:
        return 1 if p * p > q * q * d else -1
    return 1 if q * q * d > p * p else -1


class FieldElement:
    """Exact (p + q*sqrt(d)) / r with integer components and fixed d."""

    __slots__ = ("p", "q", "r", "d")

    def __init__(self, p: int, q: int, r: int, d: int):
        if r == 0:
            raise ZeroDivisionError("zero denominator in field element")
        if d <= 0 or _is_square(d):
            raise OutOfRange(f"radicand must be a positive nonsquare, got {d}")
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(abs(p), abs(q)), r)
        self.p, self.q, self.r, self.d = p // g, q // g, r // g, d

    def key(self) -> tuple[int, int, int]:
        return self.p, self.q, self.r

    def sign(self) -> int:
        return _sign_p_q_sqrt(self.p, self.q, self.d)

    def is_rational(self) -> bool:
        return self.q == 0

    def mobius(self, a: int, b: int, c: int, e: int) -> "FieldElement":
        """Apply (a x + b)/(c x + e) with integer, possibly negative, entries."""
        np_, nq = a * self.p + b * self.r, a * self.q
        dp, dq = c * self.p + e * self.r, c * self.q
        den = dp * dp - dq * dq * self.d
        if den == 0:
            raise ZeroDivisionError("pole of the transformation")
        u = np_ * dp - nq * dq * self.d
        v = nq * dp - np_ * dq
        return FieldElement(u, v, den, self.d)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        if self.d != other.d:
            raise OutOfRange("mixed radicands")
        return FieldElement(
            self.p * other.r - other.p * self.r,
            self.q * other.r - other.q * self.r,
            self.r * other.r,
            self.d,
        )

    def sub_fraction(self, f: Fraction) -> "FieldElement":
        return FieldElement(
            self.p * f.denominator - f.numerator * self.r,
            self.q * f.denominator,
            self.r * f.denominator,
            self.d,
        )

    def mul_fraction(self, f: Fraction) -> "FieldElement":
        return FieldElement(self.p * f.numerator, self.q * f.numerator,
                            self.r * f.denominator, self.d)

    def compare_fraction(self, f: Fraction) -> int:
        return self.sub_fraction(f).sign()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.d == other.d and self.key() == other.key()

    def __hash__(self) -> int:
        return hash((self.key(), self.d))

    def floor(self) -> int:
        # isqrt(q^2 d) pins q*sqrt(d) to within 1, so one adjustment suffices
        s = isqrt(self.q * self.q * self.d)
        a = (self.p + (s if self.q >= 0 else -(s + 1))) // self.r
        while self.compare_fraction(Fraction(a + 1)) >= 0:
            a += 1
        while self.compare_fraction(Fraction(a)) < 0:
            a -= 1
        return a

    def __str__(self) -> str:
        rat = Fraction(self.p, self.r)
        coef = Fraction(self.q, self.r)
        if coef == 0:
            return str(rat)
        sign = "-" if coef < 0 else "+"
        return f"{rat} {sign} {abs(coef)}*sqrt({self.d})"

    def __repr__(self) -> str:
        return f"FieldElement({self.p}, {self.q}, {self.r}, d={self.d})"


@dataclass(frozen=True)
class QuadIrr:
    """A quadratic irrational as the selected root of a2 X^2 - b1 X - c0 = 0.

    Coefficients are primitive with a2 >= 1; plus_branch picks
    (b1 + sqrt(disc)) / (2 a2) over the minus sign.  The selected root is
    always the positive one when the roots straddle 0 and is validated to
    be positive in every case.
    """

    a2: int
    b1: int
    c0: int
    plus_branch: bool = True

    def __post_init__(self) -> None:
        if self.a2 <= 0:
            raise OutOfRange("leading coefficient must be positive")
        g = gcd(gcd(self.a2, abs(self.b1)), abs(self.c0))
        if g > 1:
            object.__setattr__(self, "a2", self.a2 // g)
            object.__setattr__(self, "b1", self.b1 // g)
            object.__setattr__(self, "c0", self.c0 // g)
        if self.discriminant <= 0 or _is_square(self.discriminant):
            raise OutOfRange(
                f"discriminant {self.discriminant} is not a positive nonsquare"
            )
        if self.field_element().sign() <= 0:
            raise OutOfRange("selected root is not positive")

    @property
    def discriminant(self) -> int:
        return self.b1 * self.b1 + 4 * self.a2 * self.c0

    def field_element(self, d: int | None = None) -> FieldElement:
        """The root as an exact field element over sqrt(d); d defaults to disc."""
        disc = self.discriminant
        if d is None:
            d = disc
        t2, rem = divmod(disc, d)
        if rem or not _is_square(t2):
            raise OutOfRange(f"root lies outside Q(sqrt({d}))")
        t = isqrt(t2)
        return FieldElement(self.b1, t if self.plus_branch else -t, 2 * self.a2, d)

    def conjugate_sign(self) -> int:
        """Sign of the other root; negative exactly when c0 > 0."""
        return -1 if self.c0 > 0 else 1

    def compare_fraction(self, f: Fraction) -> int:
        return self.field_element().compare_fraction(f)

    def compare_ext(self, v: ExtRational) -> int:
        if v.is_infinite:
            return -1
        return self.compare_fraction(Fraction(v.num, v.den))

    def eval_sign_at(self, f: Fraction) -> int:
        """Sign of a2 x^2 - b1 x - c0 at a rational point, exactly."""
        x, y = f.numerator, f.denominator
        val = self.a2 * x * x - self.b1 * x * y - self.c0 * y * y
        return (val > 0) - (val < 0)

    def sqrt_value(self) -> Fraction | None:
        """If the root is the square root of a rational, that rational."""
        return Fraction(self.c0, self.a2) if self.b1 == 0 else None

    def equation_str(self) -> str:
        """Render a2 x^2 - b1 x - c0 = 0 with conventional signs."""
        terms = ["x^2" if self.a2 == 1 else f"{self.a2} x^2"]
        for coef, sym in ((-self.b1, " x"), (-self.c0, "")):
            if coef == 0:
                continue
            sign = "+" if coef > 0 else "-"
            mag = abs(coef)
            body = sym.strip() if (mag == 1 and sym) else f"{mag}{sym}"
            terms.append(f"{sign} {body}")
        return " ".join(terms) + " = 0"


class Purity(enum.Enum):
    RATIONAL = "rational"
    PURE = "pure"
    NON_PURE = "non-pure"


def _check_period(period: FiniteDesign) -> FiniteDesign:
    if period.terminal:
        raise InvalidPeriod("terminal designs cannot be periods")
    w = period.bits
    if len(w) < 2 or not w.strip("0") or not w.strip("1"):
        raise InvalidPeriod(f"period {w!r} must have length >= 2 and mix 0s and 1s")
    return period


def quad_from_period(period: FiniteDesign) -> QuadIrr:
    """Fixed-point equation of a purely periodic design with this period."""
    period = _check_period(period)
    m, n = period.number, period.length
    q1, q2, q3, q4 = sdi_quadruple(n, m)
    return QuadIrr(q3, q1 - q4, q2)


def quad_of_periodic(pd: PeriodicDesign) -> QuadIrr:
    """Value of a canonical periodic design; conjugates the pure fixed point."""
    eta = quad_from_period(pd.period)
    pre = pd.preperiod.bits
    if not pre:
        return eta
    a, b, c, d = word_matrix(pre)
    omega = eta.field_element().mobius(a, b, c, d)
    return _quad_of_field_element(omega)


def _quad_of_field_element(x: FieldElement) -> QuadIrr:
    # (rx - p)^2 = q^2 d  =>  r^2 X^2 - 2pr X + (p^2 - q^2 d) = 0
    if x.q == 0:
        raise OutOfRange("element is rational, not quadratic")
    a2 = x.r * x.r
    b1 = 2 * x.p * x.r
    c0 = x.q * x.q * x.d - x.p * x.p
    return QuadIrr(a2, b1, c0, plus_branch=x.q > 0)


@dataclass(frozen=True)
class SurdState:
    """One step of the square-root continued fraction: (p + sqrt(d)) / q."""

    p: int
    q: int
    d: int

    def __post_init__(self) -> None:
        if self.q < 1:
            raise OutOfRange("square-root walk keeps q positive")
        if (self.d - self.p * self.p) % self.q:
            raise OutOfRange("q must divide d - p^2")

    def quotient(self) -> int:
        s = isqrt(self.d)
        a = (self.p + s) // self.q
        # isqrt truncation can land one short of the true floor
        t = (a + 1) * self.q - self.p
        if t <= 0 or t * t <= self.d:
            a += 1
        return a

    def step(self) -> tuple[int, "SurdState"]:
        a = self.quotient()
        p2 = a * self.q - self.p
        return a, SurdState(p2, (self.d - p2 * p2) // self.q, self.d)


def sqrt_cf(num: int, den: int) -> tuple[list[int], list[int]]:
    """Continued fraction of sqrt(num/den): (prefix, repeating cycle)."""
    d = num * den
    state = SurdState(0, den, d)
    seen: dict[tuple[int, int], int] = {}
    quots: list[int] = []
    while (state.p, state.q) not in seen:
        seen[(state.p, state.q)] = len(quots)
        a, state = state.step()
        quots.append(a)
    k = seen[(state.p, state.q)]
    return quots[:k], quots[k:]


def cf_of_root(x: QuadIrr) -> tuple[list[int], list[int]]:
    """Continued fraction of the root: (prefix, cycle), by exact state walk."""
    el = x.field_element()
    seen: dict[tuple[int, int, int], int] = {}
    quots: list[int] = []
    while el.key() not in seen:
        seen[el.key()] = len(quots)
        a = el.floor()
        quots.append(a)
        el = el.sub_fraction(Fraction(a)).mobius(0, 1, 1, 0)
    k = seen[el.key()]
    return quots[:k], quots[k:]


def periodic_design_of_sqrt(value: Fraction) -> PeriodicDesign:
    """The purely periodic design whose value is sqrt(value).

    Runs the square-root continued fraction to its cycle, lays the
    quotients out as alternating 1/0 blocks (doubling odd cycles so the
    block parity lines up), and canonicalizes.  The result is always
    purely periodic with a run-palindromic period.
    """
    value = Fraction(value)
    if value <= 0:
        raise NonPositive(f"need a positive rational, got {value}")
    num, den = value.numerator, value.denominator
    if _is_square(num) and _is_square(den):
        raise PerfectSquare(f"sqrt({value}) is rational")
    prefix, cycle = sqrt_cf(num, den)
    s, l = len(prefix), len(cycle)
    cyc = cycle if l % 2 == 0 else cycle + cycle
    pre_word = "".join(("1" if i % 2 == 0 else "0") * r for i, r in enumerate(prefix))
    per_word = "".join(
        ("1" if (s + j) % 2 == 0 else "0") * r for j, r in enumerate(cyc)
    )
    d = make_periodic(pre_word, per_word)
    if not isinstance(d, PeriodicDesign) or not d.preperiod.is_empty:
        raise AssertionError(f"sqrt design for {value} did not come out pure: {d}")
    return d


def classify_type(period: FiniteDesign) -> int:
    """Type 1-4 of the pure value by whether the end runs are empty."""
    ks = runs(_check_period(period))
    first, last = ks[0] >= 1, ks[-1] >= 1
    if first:
        return 2 if last else 1
    return 4 if last else 3


def conjugate_root_design(period: FiniteDesign) -> FiniteDesign:
    """Period whose pure value is the negated conjugate root: the run reversal."""
    return inverse_design(_check_period(period))


def purity_test(t: Fraction) -> Purity:
    """Classify the value at rational theta by the denominator's 2-part."""
    if t < 0 or t >= 1:
        raise OutOfRange(f"theta must lie in [0, 1), got {t}")
    q = t.denominator
    if q & (q - 1) == 0:
        return Purity.RATIONAL
    return Purity.PURE if q % 2 else Purity.NON_PURE
