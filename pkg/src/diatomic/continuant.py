"""Continuants and continued fractions over exact integers.

The continuant is evaluated by its linear recursion (empty word gives 1);
continued fractions are folded right to left in the extended rationals,
where 1/0 = inf and 1/inf = 0 are ordinary steps.
"""

from __future__ import annotations

from ._backend import continuant_pair
from .design import check_runs
from .errors import MalformedRuns
from .rational import ExtRational


def continuant(ks) -> int:
    """[k0, ..., k_{l-1}] by the left-to-right recursion; [] gives 1."""
    return continuant_pair(list(ks))[1]


def _check_cf_word(ks) -> tuple[int, ...]:
    ks = tuple(ks)
    if not ks:
        raise MalformedRuns("continued fraction word must be nonempty")
    if ks[0] < 0 or ks[-1] < 0 or any(k < 1 for k in ks[1:-1]):
        raise MalformedRuns(f"bad continued fraction word {ks}")
    return ks


def cf_eval(ks) -> ExtRational:
    """Value of CF(k0, ..., k_{l-1}) in the extended rationals."""
    ks = _check_cf_word(ks)
    v = ExtRational(ks[-1])
    for k in reversed(ks[:-1]):
        v = ExtRational(k) + v.reciprocal()
    return v


def sdi_from_runs(ks) -> int:
    """Table value of the design whose run encoding is ks."""
    return continuant(check_runs(ks))


def sdi_corner_continuants(ks) -> tuple[int, int, int, int]:
    """The matrix quadruple of a run word, as continuants:

    ([k0..k_{l-1}], [k1..k_{l-1}], [k0..k_{l-2}], [k1..k_{l-2}])

    For a single-run word this degenerates to (k0, 1, 1, 0).
    """
    ks = check_runs(ks)
    if len(ks) == 1:
        return ks[0], 1, 1, 0
    head_prev, head = continuant_pair(list(ks))
    tail_prev, tail = continuant_pair(list(ks[1:]))
    return head, tail, head_prev, tail_prev


def cf_product_decomposition(ks) -> list[ExtRational]:
    """The tail values CF(k_j, ..) whose product telescopes to the continuant.

    Words ending in 0 are first truncated by two entries; a bare (k0, 0)
    or (0,) has no decomposition.
    """
    ks = _check_runs_for_product(ks)
    tails = []
    v = ExtRational(ks[-1])
    tails.append(v)
    for k in reversed(ks[:-1]):
        v = ExtRational(k) + v.reciprocal()
        tails.append(v)
    tails.reverse()
    product = ExtRational(1)
    for t in tails:
        product = product * t
    if product != ExtRational(continuant(ks)):
        raise AssertionError("tail product disagrees with the continuant")
    return tails


def _check_runs_for_product(ks) -> tuple[int, ...]:
    ks = _check_cf_word(ks)
    if ks[-1] >= 1:
        return ks
    if len(ks) < 3:
        raise MalformedRuns(f"no tail decomposition for {ks}")
    return ks[:-2]
