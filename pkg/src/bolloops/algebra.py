"""Concrete arithmetic backing the catalog.

Two small worlds live here: the 27-element field F27 modelled as
F3[x]/(x^3 - x - 1), and invertible matrices over GF(2) together with the
Singer cycle of GL(n,2).

F27 elements are plain integers 0..26 under the indexing c0 + 3*c1 + 9*c2
for c0 + c1*x + c2*x^2; this indexing doubles as the permutation domain for
the order-1053 catalog entry.
"""
from __future__ import annotations

from collections import namedtuple

import numpy as np

from .errors import UnsupportedDimension
from .perm import FiniteGroup, Permutation, generate, orbit


# -- F27 -------------------------------------------------------------------

def _coeffs(e):
    return (e % 3, (e // 3) % 3, e // 9)


def _index(c0, c1, c2):
    return (c0 % 3) + 3 * (c1 % 3) + 9 * (c2 % 3)


def _mul_raw(a, b):
    a0, a1, a2 = _coeffs(a)
    b0, b1, b2 = _coeffs(b)
    p = [0] * 5
    for i, ai in enumerate((a0, a1, a2)):
        for j, bj in enumerate((b0, b1, b2)):
            p[i + j] += ai * bj
    # reduce with x^3 = x + 1, x^4 = x^2 + x
    p[0] += p[3]
    p[1] += p[3] + p[4]
    p[2] += p[4]
    return _index(p[0], p[1], p[2])


def _build_tables():
    add = np.empty((27, 27), dtype=np.int8)
    mul = np.empty((27, 27), dtype=np.int8)
    for a in range(27):
        a0, a1, a2 = _coeffs(a)
        for b in range(27):
            b0, b1, b2 = _coeffs(b)
            add[a, b] = _index(a0 + b0, a1 + b1, a2 + b2)
            mul[a, b] = _mul_raw(a, b)
    return add, mul


F27_ADD, F27_MUL = _build_tables()

#: x as an element index
F27_X = 3


def f27_add(a, b):
    return int(F27_ADD[a, b])


def f27_mul(a, b):
    return int(F27_MUL[a, b])


def f27_neg(a):
    c0, c1, c2 = _coeffs(a)
    return _index(-c0, -c1, -c2)


def f27_pow(a, k):
    r = 1
    for _ in range(k):
        r = f27_mul(r, a)
    return r


def frobenius(a, k):
    """a^(3^k); k in {0,1,2} (and frobenius(.,3) is the identity)."""
    r = a
    for _ in range(k % 3):
        r = f27_pow(r, 3)
    return r


def f27_squares():
    """The 13 nonzero squares, an index-2 subgroup of the unit group."""
    return frozenset(f27_mul(z, z) for z in range(1, 27))


def f27_multiplicative_generator():
    """Smallest-index generator of the order-26 unit group."""
    for g in range(2, 27):
        seen = set()
        z = 1
        for _ in range(26):
            z = f27_mul(z, g)
            seen.add(z)
        if len(seen) == 26:
            return g
    raise AssertionError("F27 unit group has no generator?")


# -- GF(2) matrices --------------------------------------------------------

# primitive polynomials, stored as the bitmask of coefficients c0..c_{n-1}
# of x^n = c_{n-1} x^{n-1} + ... + c0
_PRIMITIVE = {3: 0b011, 4: 0b0011, 5: 0b00101}


class GF2Matrix:
    """An n x n bit matrix, stored as a tuple of row bitmasks."""

    __slots__ = ("rows", "n")

    def __init__(self, rows, n):
        self.rows = tuple(int(r) for r in rows)
        self.n = n
        if len(self.rows) != n:
            raise ValueError("expected %d rows" % n)

    @classmethod
    def identity(cls, n):
        return cls([1 << i for i in range(n)], n)

    def apply(self, v):
        """Image of the column vector v (a bitmask)."""
        out = 0
        for i, row in enumerate(self.rows):
            if bin(row & v).count("1") & 1:
                out |= 1 << i
        return out

    def __mul__(self, other):
        cols = [self.apply(other.column(j)) for j in range(self.n)]
        return GF2Matrix.from_columns(cols, self.n)

    def column(self, j):
        c = 0
        for i, row in enumerate(self.rows):
            if (row >> j) & 1:
                c |= 1 << i
        return c

    @classmethod
    def from_columns(cls, cols, n):
        rows = [0] * n
        for j, c in enumerate(cols):
            for i in range(n):
                if (c >> i) & 1:
                    rows[i] |= 1 << j
        return cls(rows, n)

    def is_invertible(self):
        rows = list(self.rows)
        rank = 0
        for col in range(self.n):
            pivot = next((i for i in range(rank, self.n)
                          if (rows[i] >> col) & 1), None)
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            for i in range(self.n):
                if i != rank and (rows[i] >> col) & 1:
                    rows[i] ^= rows[rank]
            rank += 1
        return rank == self.n

    def to_permutation(self):
        """Action on the 2^n - 1 nonzero vectors; point v-1 stands for the
        vector with bitmask v."""
        npoints = (1 << self.n) - 1
        return Permutation(self.apply(v + 1) - 1 for v in range(npoints))

    def __eq__(self, other):
        return isinstance(other, GF2Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "GF2Matrix(%r, n=%d)" % (list(self.rows), self.n)


def gl2_singer_generator(n):
    """Companion matrix of the hardcoded primitive polynomial of degree n;
    its order is 2^n - 1 and it acts regularly on nonzero vectors."""
    if n not in _PRIMITIVE:
        raise UnsupportedDimension("no primitive polynomial for n=%d" % n)
    low = _PRIMITIVE[n]
    cols = []
    for j in range(n):
        # image of basis vector x^j under multiplication by x
        if j < n - 1:
            cols.append(1 << (j + 1))
        else:
            cols.append(low)
    return GF2Matrix.from_columns(cols, n)


def _transvection(n, i, j):
    """I + E_{i,j}: adds coordinate j into coordinate i."""
    rows = [1 << k for k in range(n)]
    rows[i] |= 1 << j
    return GF2Matrix(rows, n)


GLPermGroups = namedtuple("GLPermGroups", ["X", "Y0", "Y1"])


def gl2_as_permutation_group(n, cap=None):
    """GL(n,2) acting on the 2^n - 1 nonzero vectors, together with its
    Singer cycle Y0 and the stabilizer Y1 of the first basis vector."""
    if n not in _PRIMITIVE:
        raise UnsupportedDimension("no primitive polynomial for n=%d" % n)
    xgens = [_transvection(n, i, j).to_permutation()
             for i in range(n) for j in range(n) if i != j]
    singer = gl2_singer_generator(n).to_permutation()
    y1gens = [_transvection(n, i, j).to_permutation()
              for i in range(n) for j in range(1, n) if i != j]
    kwargs = {} if cap is None else {"cap": cap}
    X = FiniteGroup(xgens, **kwargs)
    Y0 = generate([singer])
    Y1 = FiniteGroup(y1gens, **kwargs)
    return GLPermGroups(X=X, Y0=Y0, Y1=Y1)
