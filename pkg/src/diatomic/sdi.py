"""Stern's diatomic sequence and its depth/order table addressing.

The table entry at depth n, order m (0 <= m <= 2**n) is the sequence
value a_m; the address carries where the value sits, which is what the
rest of the library keys on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ._backend import stern_pair
from .errors import OutOfTable


def stern(m: int) -> int:
    """a_m, by a binary-digit scan over the consecutive pair (a_j, a_{j+1})."""
    if m < 0:
        raise OutOfTable(f"sequence index must be nonnegative, got {m}")
    return stern_pair(m)[0]


def sdi(depth: int, order: int) -> int:
    """Table value at (depth, order); rejects orders past the row end."""
    _check_address(depth, order, limit_offset=0)
    return stern_pair(order)[0]


@lru_cache(maxsize=65536)
def sdi_quadruple(depth: int, order: int) -> tuple[int, int, int, int]:
    """The four row-n values around order m:

    ([2^n:m+1], [2^n:m], [2^n:2^n-(m+1)], [2^n:2^n-m])

    Cached because derivative scans revisit nearby addresses; the cache is
    bounded and read-through, so concurrent readers are safe.
    """
    _check_address(depth, order, limit_offset=1)
    q2, q1 = stern_pair(order)
    q3, q4 = stern_pair((1 << depth) - order - 1)
    return q1, q2, q3, q4


def _check_address(depth: int, order: int, limit_offset: int) -> None:
    if depth < 0 or order < 0:
        raise OutOfTable(f"negative address ({depth}, {order})")
    if order > (1 << depth) - limit_offset:
        raise OutOfTable(
            f"order {order} exceeds row end 2^{depth}"
            + (" - 1" if limit_offset else "")
        )


@dataclass(frozen=True)
class SdiAddress:
    """A (depth, order) position in the table."""

    depth: int
    order: int

    def __post_init__(self) -> None:
        _check_address(self.depth, self.order, limit_offset=0)

    def value(self) -> int:
        return sdi(self.depth, self.order)

    def quadruple(self) -> tuple[int, int, int, int]:
        return sdi_quadruple(self.depth, self.order)
