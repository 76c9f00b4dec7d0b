"""Design words: finite 0/1 words, terminal markers, eventually periodic words.

A finite design of length n is a binary word for some m with
0 <= m <= 2**n - 1; the terminal design of length n stands for m = 2**n
and is flagged rather than spelled out, so it stays distinct from the
length-(n+1) word 10...0.  Eventually periodic designs are held as a
canonical (preperiod, period) pair: the period is primitive and the
preperiod is minimal, which makes equality and the theta value decidable.

Text grammar (also the CLI wire format):

    design   := [01]*            finite word, '' is the empty design
              | [01]* 't'        terminal design; length = number of bits
              | [01]* '(' [01]+ ')'   eventually periodic word
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    DesignSyntaxError,
    InvalidPeriod,
    MalformedRuns,
    NotCoprime,
    OutOfRange,
    TerminalDesign,
    ZeroInput,
)


def _check_word(word: str) -> None:
    if word.strip("01"):
        raise DesignSyntaxError(f"design word may contain only 0 and 1: {word!r}")


def _terminal_word(n: int) -> str:
    return "1" + "0" * (n - 1) if n else ""


@dataclass(frozen=True)
class FiniteDesign:
    """A finite design; ``terminal`` marks the row-end value 2**n."""

    bits: str
    terminal: bool = False

    def __post_init__(self) -> None:
        _check_word(self.bits)
        if self.terminal and self.bits != _terminal_word(len(self.bits)):
            raise DesignSyntaxError("terminal design carries only its length")

    @classmethod
    def terminal_of(cls, n: int) -> "FiniteDesign":
        return cls(_terminal_word(n), terminal=True)

    @property
    def length(self) -> int:
        return len(self.bits)

    @property
    def number(self) -> int:
        if self.terminal:
            return 1 << len(self.bits)
        return int(self.bits, 2) if self.bits else 0

    @property
    def is_empty(self) -> bool:
        return not self.bits and not self.terminal

    def __str__(self) -> str:
        return self.bits + ("t" if self.terminal else "")


@dataclass(frozen=True)
class PeriodicDesign:
    """Canonical eventually periodic design.

    Invariants: the period is nonempty, not all one symbol, primitive
    (no shorter word repeats into it), and the preperiod cannot be
    shortened by rotating a shared trailing bit into the period.
    """

    preperiod: FiniteDesign
    period: FiniteDesign

    def __post_init__(self) -> None:
        if self.preperiod.terminal or self.period.terminal:
            raise DesignSyntaxError("periodic design parts must be plain words")
        per = self.period.bits
        if not per or not per.strip("0") or not per.strip("1"):
            raise InvalidPeriod(f"period {per!r} must mix 0s and 1s")
        if not _is_primitive_word(per):
            raise InvalidPeriod(f"period {per!r} repeats a shorter word")
        if self.preperiod.bits and self.preperiod.bits[-1] == per[-1]:
            raise InvalidPeriod("preperiod can be rotated into the period")

    def __str__(self) -> str:
        return f"{self.preperiod.bits}({self.period.bits})"


Design = FiniteDesign | PeriodicDesign

EMPTY = FiniteDesign("")


def _is_primitive_word(word: str) -> bool:
    n = len(word)
    for d in range(1, n):
        if n % d == 0 and word == word[:d] * (n // d):
            return False
    return True


def make_periodic(pre: str, per: str) -> Design:
    """Canonicalize a (preperiod, period) word pair, keeping theta fixed.

    All-zero periods collapse to the finite preperiod; all-one periods
    carry into it (a trailing 111... tail is a dyadic reached from below).
    """
    _check_word(pre)
    _check_word(per)
    if not per:
        raise InvalidPeriod("period must be nonempty")
    if not per.strip("0"):
        return FiniteDesign(pre)
    if not per.strip("1"):
        m = (int(pre, 2) if pre else 0) + 1
        if m == 1 << len(pre):
            return FiniteDesign.terminal_of(0)
        return FiniteDesign(format(m, f"0{len(pre)}b"))
    for d in range(1, len(per)):
        if len(per) % d == 0 and per == per[:d] * (len(per) // d):
            per = per[:d]
            break
    while pre and pre[-1] == per[-1]:
        per = per[-1] + per[:-1]
        pre = pre[:-1]
    return PeriodicDesign(FiniteDesign(pre), FiniteDesign(per))


def parse_design(text: str) -> Design:
    """Parse the design grammar; periodic results come out canonical."""
    text = text.strip()
    if text.endswith("t"):
        body = text[:-1]
        if "(" in body or ")" in body:
            raise DesignSyntaxError("terminal marker cannot combine with a period")
        _check_word(body)
        return FiniteDesign.terminal_of(len(body))
    if "(" in text:
        head, _, rest = text.partition("(")
        per, close, tail = rest.partition(")")
        if not close or tail:
            raise DesignSyntaxError(f"unbalanced period group in {text!r}")
        if not per:
            raise DesignSyntaxError("empty period group")
        return make_periodic(head, per)
    if ")" in text:
        raise DesignSyntaxError(f"unbalanced period group in {text!r}")
    _check_word(text)
    return FiniteDesign(text)


def runs(d: FiniteDesign) -> tuple[int, ...]:
    """Odd-length run encoding 1^k0 0^k1 ... 1^k_{l-1}; end runs may be 0."""
    if d.terminal:
        raise TerminalDesign("terminal designs have the fixed encoding (1, n, 0)")
    return _runs_of_word(d.bits)


def _runs_of_word(word: str) -> tuple[int, ...]:
    ks = [0]
    symbol = "1"
    for ch in word:
        if ch == symbol:
            ks[-1] += 1
        else:
            ks.append(1)
            symbol = ch
    if symbol == "0":
        ks.append(0)
    return tuple(ks)


def check_runs(ks) -> tuple[int, ...]:
    ks = tuple(ks)
    if len(ks) % 2 == 0:
        raise MalformedRuns(f"run list length must be odd: {ks}")
    if any(k < 0 for k in ks):
        raise MalformedRuns(f"negative run in {ks}")
    if ks[0] < 0 or ks[-1] < 0 or any(k < 1 for k in ks[1:-1]):
        raise MalformedRuns(f"interior runs must be positive: {ks}")
    return ks


def from_runs(ks) -> FiniteDesign:
    """Inverse of runs()."""
    ks = check_runs(ks)
    word = "".join(("1" if i % 2 == 0 else "0") * k for i, k in enumerate(ks))
    return FiniteDesign(word)


def design_number(d: FiniteDesign) -> tuple[int, int]:
    """(m, n) with m the word value and n the length; terminal gives (2**n, n)."""
    return d.number, d.length


def partial_quotients(a: int, b: int) -> tuple[int, ...]:
    """Euclidean quotients of a generated by b, for coprime positive a, b.

    The first quotient may be 0 (when a < b); the last is >= 2 except for
    the single case (1, 1) -> (1,).
    """
    if a < 1 or b < 1:
        raise ZeroInput(f"need positive integers, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise NotCoprime(f"({a}, {b}) share a factor")
    rs = []
    hi, lo = a, b
    while lo:
        rs.append(hi // lo)
        hi, lo = lo, hi % lo
    return tuple(rs)


def realizing_pair(rs) -> tuple[int, int]:
    """The unique coprime (a, b) whose quotients are rs; inverts partial_quotients."""
    rs = tuple(rs)
    if rs == (1,):
        return 1, 1
    if not rs or rs[0] < 0 or any(r < 1 for r in rs[1:-1]) or rs[-1] < 2:
        raise MalformedRuns(f"not a quotient sequence: {rs}")
    x, y = 1, 0
    for r in reversed(rs):
        x, y = x * r + y, x
    return x, y


def euclidean_design(a: int, b: int) -> FiniteDesign:
    """The reduced design built from the quotients of a generated by b."""
    if (a, b) == (1, 1):
        return FiniteDesign("1")
    rs = partial_quotients(a, b)
    t = len(rs)
    blocks = [("1" if i % 2 == 0 else "0") * r for i, r in enumerate(rs)]
    if t % 2 == 0:
        blocks[-1] = "0" * (rs[-1] - 1) + "1"
    return FiniteDesign("".join(blocks))


def conjugate(d: Design) -> Design:
    """Finite: the design of 2**n - m at the same length.  Periodic: flip bits."""
    if isinstance(d, PeriodicDesign):
        return PeriodicDesign(
            FiniteDesign(_flip(d.preperiod.bits)), FiniteDesign(_flip(d.period.bits))
        )
    n = d.length
    if d.terminal:
        return FiniteDesign("0" * n)
    m = (1 << n) - d.number
    if m == 1 << n:
        return FiniteDesign.terminal_of(n)
    return FiniteDesign(format(m, f"0{n}b") if n else "")


def _flip(word: str) -> str:
    return word.translate(str.maketrans("01", "10"))


def inverse_design(d: FiniteDesign) -> FiniteDesign:
    """Reverse the run-length list; an involution that preserves the table value."""
    return from_runs(runs(d)[::-1])


def compose(d: FiniteDesign, d2: Design) -> Design:
    """Concatenate words: theta(d d2) = theta(d) + 2**-n * theta(d2).

    A terminal right factor increments d and pads with zeros, except that
    the all-ones d overflows into the longer terminal design.
    """
    if d.terminal:
        raise TerminalDesign("left factor must be a plain word")
    if isinstance(d2, PeriodicDesign):
        return make_periodic(d.bits + d2.preperiod.bits, d2.period.bits)
    if d2.terminal:
        m, n = d.number, d.length
        if m == (1 << n) - 1:
            return FiniteDesign.terminal_of(n + d2.length)
        return FiniteDesign(format(m + 1, f"0{n}b") + "0" * d2.length)
    return FiniteDesign(d.bits + d2.bits)


def reduce(d: FiniteDesign) -> FiniteDesign:
    """Strip trailing zeros; the theta value is unchanged."""
    if d.terminal:
        raise TerminalDesign("terminal designs do not reduce")
    return FiniteDesign(d.bits.rstrip("0"))


def is_reduced(d: FiniteDesign) -> bool:
    """Odd design number; the two length-0 designs count as reduced."""
    if d.terminal:
        return d.length == 0
    return not d.bits or d.bits.endswith("1")


def is_primitive(d: FiniteDesign) -> bool:
    """Reduced with the leading bit set, i.e. 2**(n-1) <= m <= 2**n - 1."""
    if d.terminal or not d.bits:
        return False
    return d.bits.startswith("1") and d.bits.endswith("1")


def theta_of(d: Design) -> Fraction:
    """The binary value in [0, 1] of the design's (possibly infinite) word."""
    if isinstance(d, PeriodicDesign):
        mp, k = design_number(d.preperiod)
        mpp, n = design_number(d.period)
        top = (1 << n) - 1
        return Fraction(top * mp + mpp, (1 << k) * top)
    if d.terminal:
        return Fraction(1)
    return Fraction(d.number, 1 << d.length)


def design_of_theta(t: Fraction) -> Design:
    """The unique canonical design with the given theta.

    Dyadic values give the reduced finite design (1 gives the length-0
    terminal); other rationals give the canonical periodic design via the
    base-2 long division cycle.
    """
    if t < 0 or t > 1:
        raise OutOfRange(f"theta must lie in [0, 1], got {t}")
    if t == 1:
        return FiniteDesign.terminal_of(0)
    q = t.denominator
    if q & (q - 1) == 0:
        n = q.bit_length() - 1
        return FiniteDesign(format(t.numerator, f"0{n}b") if n else "")
    digits: list[int] = []
    seen: dict[int, int] = {}
    r = t.numerator
    while r not in seen:
        seen[r] = len(digits)
        r *= 2
        digits.append(r // q)
        r %= q
    k = seen[r]
    word = "".join(map(str, digits))
    return make_periodic(word[:k], word[k:])
