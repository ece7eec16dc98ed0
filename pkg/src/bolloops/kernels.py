"""Hot numeric kernels: exhaustive Bol identity scans and congruence
closure over Cayley tables.

Each kernel has a numba @njit implementation and a pure-numpy fallback.
Set BOLLOOPS_NO_NUMBA=1 to force the fallback; both paths return identical
results (witnesses are always the lexicographically least violation).
"""
from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("BOLLOOPS_NO_NUMBA", "") not in ("", "0")

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:          # pragma: no cover
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _DISABLED


def active_backend():
    return "numba" if USE_NUMBA else "numpy"


# -- numpy implementations -------------------------------------------------

def left_bol_exhaustive_numpy(t):
    """First (x,y,z) violating x(y(xz)) = (x(yx))z, or (-1,-1,-1)."""
    n = t.shape[0]
    for x in range(n):
        tx = t[x]
        lhs = tx[t[:, tx]]          # [y,z] = x(y(xz))
        rhs = t[tx[t[:, x]]]        # [y,z] = (x(yx))z
        neq = lhs != rhs
        if neq.any():
            flat = int(np.argmax(neq))
            return x, flat // n, flat % n
    return -1, -1, -1


def right_bol_exhaustive_numpy(t):
    """First (x,y,z) violating ((xy)z)y = x((yz)y), or (-1,-1,-1)."""
    n = t.shape[0]
    ycol = np.arange(n)[:, None]
    inner = t[t, ycol]              # [y,z] = (yz)y
    for x in range(n):
        lhs = t[t[t[x]], ycol]      # [y,z] = ((xy)z)y
        rhs = t[x][inner]           # [y,z] = x((yz)y)
        neq = lhs != rhs
        if neq.any():
            flat = int(np.argmax(neq))
            return x, flat // n, flat % n
    return -1, -1, -1


def _congruence_close_python(t, pairs):
    n = t.shape[0]
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    queue = []

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
            queue.append((a, b))

    for a, b in pairs:
        union(int(a), int(b))
    head = 0
    while head < len(queue):
        p, q = queue[head]
        head += 1
        for u in range(n):
            union(int(t[u, p]), int(t[u, q]))
            union(int(t[p, u]), int(t[q, u]))
    return np.array([find(i) for i in range(n)], dtype=np.int32)


# -- numba implementations -------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def _left_bol_nb(t):
        n = t.shape[0]
        for x in range(n):
            for y in range(n):
                w = t[x, t[y, x]]
                for z in range(n):
                    if t[x, t[y, t[x, z]]] != t[w, z]:
                        return x, y, z
        return -1, -1, -1

    @njit(cache=True)
    def _right_bol_nb(t):
        n = t.shape[0]
        for x in range(n):
            for y in range(n):
                a = t[x, y]
                for z in range(n):
                    if t[t[a, z], y] != t[x, t[t[y, z], y]]:
                        return x, y, z
        return -1, -1, -1

    @njit(cache=True)
    def _uf_find(parent, a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    @njit(cache=True)
    def _congruence_close_nb(t, pa, pb):
        n = t.shape[0]
        parent = np.arange(n, dtype=np.int64)
        cap = n + pa.size
        qa = np.empty(cap, dtype=np.int64)
        qb = np.empty(cap, dtype=np.int64)
        tail = 0
        for k in range(pa.size):
            ra = _uf_find(parent, pa[k])
            rb = _uf_find(parent, pb[k])
            if ra != rb:
                if ra < rb:
                    parent[rb] = ra
                else:
                    parent[ra] = rb
                qa[tail] = pa[k]
                qb[tail] = pb[k]
                tail += 1
        head = 0
        while head < tail:
            p = qa[head]
            q = qb[head]
            head += 1
            for u in range(n):
                a = t[u, p]
                b = t[u, q]
                ra = _uf_find(parent, a)
                rb = _uf_find(parent, b)
                if ra != rb:
                    if ra < rb:
                        parent[rb] = ra
                    else:
                        parent[ra] = rb
                    qa[tail] = a
                    qb[tail] = b
                    tail += 1
                a = t[p, u]
                b = t[q, u]
                ra = _uf_find(parent, a)
                rb = _uf_find(parent, b)
                if ra != rb:
                    if ra < rb:
                        parent[rb] = ra
                    else:
                        parent[ra] = rb
                    qa[tail] = a
                    qb[tail] = b
                    tail += 1
        out = np.empty(n, dtype=np.int32)
        for i in range(n):
            out[i] = _uf_find(parent, i)
        return out


# -- dispatching API -------------------------------------------------------

def left_bol_exhaustive(table):
    t = np.ascontiguousarray(table, dtype=np.int32)
    if USE_NUMBA:
        return tuple(int(v) for v in _left_bol_nb(t))
    return left_bol_exhaustive_numpy(t)


def right_bol_exhaustive(table):
    t = np.ascontiguousarray(table, dtype=np.int32)
    if USE_NUMBA:
        return tuple(int(v) for v in _right_bol_nb(t))
    return right_bol_exhaustive_numpy(t)


def congruence_close(table, pairs):
    """Finest table-stable partition merging the given pairs.

    Pairs (p,q) are merged, then closed under (p,q) -> (u*p, u*q) and
    (p*u, q*u) for every u.  Returns class labels normalized to the
    smallest member of each class.
    """
    t = np.ascontiguousarray(table, dtype=np.int32)
    pairs = np.atleast_2d(np.asarray(pairs, dtype=np.int64))
    if pairs.size == 0:
        return np.arange(t.shape[0], dtype=np.int32)
    if USE_NUMBA:
        labels = _congruence_close_nb(t, np.ascontiguousarray(pairs[:, 0]),
                                      np.ascontiguousarray(pairs[:, 1]))
    else:
        labels = _congruence_close_python(t, pairs)
    # normalize: label every class by its smallest member
    roots, inv = np.unique(labels, return_inverse=True)
    mins = np.full(len(roots), t.shape[0], dtype=np.int64)
    np.minimum.at(mins, inv, np.arange(t.shape[0]))
    return mins[inv].astype(np.int32)


def bol_sampled(table, samples, seed, right=False, chunk=1 << 20):
    """Check a Bol identity on ``samples`` seeded uniform triples.

    Returns (holds, witness) where the witness is the first violating
    triple in draw order, independent of chunking.
    """
    t = np.ascontiguousarray(table, dtype=np.int64)
    n = t.shape[0]
    rng = np.random.default_rng(seed)
    remaining = samples
    while remaining > 0:
        m = min(chunk, remaining)
        # row-per-triple layout keeps the draw sequence independent of
        # the chunk size
        xyz = rng.integers(0, n, size=(m, 3))
        x, y, z = xyz[:, 0], xyz[:, 1], xyz[:, 2]
        if right:
            lhs = t[t[t[x, y], z], y]
            rhs = t[x, t[t[y, z], y]]
        else:
            lhs = t[x, t[y, t[x, z]]]
            rhs = t[t[x, t[y, x]], z]
        neq = lhs != rhs
        if neq.any():
            k = int(np.argmax(neq))
            return False, (int(x[k]), int(y[k]), int(z[k]))
        remaining -= m
    return True, None
