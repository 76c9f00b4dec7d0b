# cython: language_level=3
"""Compiled twin of _pykernels.  Same contracts, same results.

Values are Python ints (arbitrary precision is part of the contract);
the win over the pure build is loop and dispatch overhead.
"""


def stern_pair(m):
    """Return (a_m, a_{m+1}) of the diatomic sequence in O(bit_length) steps."""
    cdef Py_ssize_t k
    a = 0
    b = 1
    for k in range(m.bit_length() - 1, -1, -1):
        if (m >> k) & 1:
            a = a + b
        else:
            b = a + b
    return a, b


def continuant_pair(ks):
    """Fold the continuant recursion; return (value of ks[:-1], value of ks)."""
    prev = 0
    cur = 1
    for x in ks:
        prev, cur = cur, cur * x + prev
    return prev, cur


def word_matrix(bits):
    """Product of the two generator matrices along a 0/1 word, row-major 2x2."""
    cdef Py_ssize_t i, n
    a = 1
    b = 0
    c = 0
    d = 1
    n = len(bits)
    for i in range(n):
        if bits[i] == "1":
            b = a + b
            d = c + d
        else:
            a = a + b
            c = c + d
    return a, b, c, d


def matrix_word(a, b, c, d):
    """Factor a nonnegative determinant-1 matrix into its unique 0/1 word."""
    out = []
    while True:
        if a == d == 1 and b == c == 0:
            return "".join(out)
        if a >= c and b >= d:
            out.append("1")
            a = a - c
            b = b - d
        elif c >= a and d >= b:
            out.append("0")
            c = c - a
            d = d - b
        else:
            raise ValueError("matrix is not in the nonnegative unimodular monoid")
