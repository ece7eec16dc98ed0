"""Finite loops as Cayley tables.

Identity verification (left/right Bol, Moufang), translations and
multiplication groups, normal subloops via congruence generation,
quotients, simplicity, solvability, principal isotopes and small-scale
isomorphism testing.
"""
from __future__ import annotations

import dataclasses
import itertools

import numpy as np

from . import kernels
from .errors import NotNormal, SizeGate
from .perm import (Permutation, group_order_schreier, is_solvable_group,
                   FiniteGroup, reduce_generators)

#: default n^3 budget for exhaustive identity checks; 1053^3 is above it,
#: so the order-1053 loop is sampled unless exhaustive mode is forced
EXHAUSTIVE_LIMIT = 1_000_000_000
#: default number of sampled triples above the budget
DEFAULT_SAMPLES = 1_000_000
DEFAULT_SEED = 0
#: size gates for congruence-heavy operations and isomorphism search
CONGRUENCE_GATE = 2000
ISO_GATE = 64


class CayleyLoop:
    """A finite loop as an n x n index table with identity at index 0."""

    def __init__(self, table, labels=None, meta=None):
        t = np.array(table, dtype=np.int32)
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise ValueError("table must be square")
        t.setflags(write=False)
        self.table = t
        self.order = t.shape[0]
        self.labels = list(labels) if labels is not None else None
        self.meta = dict(meta) if meta else {}

    @classmethod
    def from_group(cls, group):
        """Cayley table of a finite group, elements sorted identity-first."""
        elems = group.sorted_elements()
        index = {e.images: i for i, e in enumerate(elems)}
        n = len(elems)
        table = [[index[(a * b).images] for b in elems] for a in elems]
        labels = [e.cycle_string() for e in elems]
        return cls(table, labels=labels)

    def to_json(self):
        data = {"order": self.order, "identity": 0,
                "table": self.table.tolist()}
        if self.labels is not None:
            data["labels"] = self.labels
        if self.meta:
            data["meta"] = self.meta
        return data

    @classmethod
    def from_json(cls, data):
        return cls(data["table"], labels=data.get("labels"),
                   meta=data.get("meta"))

    def to_csv(self):
        """1-indexed Cayley rows for interoperability."""
        return "\n".join(",".join(str(v + 1) for v in row)
                         for row in self.table.tolist()) + "\n"

    @classmethod
    def from_csv(cls, text):
        rows = [[int(v) - 1 for v in line.split(",")]
                for line in text.strip().splitlines()]
        return cls(rows)

    def __repr__(self):
        return "CayleyLoop(order=%d)" % self.order


def is_loop(table):
    """Latin square with two-sided identity at index 0."""
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        return False
    n = t.shape[0]
    idx = np.arange(n)
    if not (np.array_equal(np.sort(t, axis=1), np.tile(idx, (n, 1)))
            and np.array_equal(np.sort(t, axis=0), np.tile(idx[:, None], (1, n)))):
        return False
    return np.array_equal(t[0], idx) and np.array_equal(t[:, 0], idx)


def left_translation(loop, a):
    """L_a(x) = a*x, i.e. row a of the table."""
    return Permutation(loop.table[a])


def right_translation(loop, a):
    """R_a(x) = x*a, i.e. column a of the table."""
    return Permutation(loop.table[:, a])


def lmlt_generators(loop):
    """The left translations {L_a}, deduplicated, as permutations."""
    seen = set()
    out = []
    for a in range(loop.order):
        p = tuple(int(v) for v in loop.table[a])
        if p not in seen:
            seen.add(p)
            out.append(Permutation(p))
    return out


def mlt_generators(loop):
    """All translations {L_a, R_a}, deduplicated."""
    seen = set()
    out = []
    for a in range(loop.order):
        for p in (tuple(int(v) for v in loop.table[a]),
                  tuple(int(v) for v in loop.table[:, a])):
            if p not in seen:
                seen.add(p)
                out.append(Permutation(p))
    return out


def lmlt_order(loop):
    return group_order_schreier(lmlt_generators(loop))


def mlt_order(loop):
    return group_order_schreier(mlt_generators(loop))


@dataclasses.dataclass
class BolCheck:
    holds: bool
    mode: str                      # "exhaustive" or "sampled"
    witness: tuple | None = None   # first violating (x, y, z)
    samples: int | None = None
    seed: int | None = None

    def to_json(self):
        return {"holds": self.holds, "mode": self.mode,
                "witness": list(self.witness) if self.witness else None,
                "samples": self.samples, "seed": self.seed}


def _resolve_mode(n, mode, exhaustive_limit, force_exhaustive):
    if mode in ("exhaustive", "sampled"):
        return mode
    if force_exhaustive or n ** 3 <= exhaustive_limit:
        return "exhaustive"
    return "sampled"


def check_left_bol(loop, mode="auto", samples=DEFAULT_SAMPLES,
                   seed=DEFAULT_SEED, exhaustive_limit=EXHAUSTIVE_LIMIT,
                   force_exhaustive=False):
    """x(y(xz)) = (x(yx))z over all (or sampled) triples.

    The exhaustive scan reports the lexicographically least violation.
    """
    return _bol_check(loop, False, mode, samples, seed, exhaustive_limit,
                      force_exhaustive)


def check_right_bol(loop, mode="auto", samples=DEFAULT_SAMPLES,
                    seed=DEFAULT_SEED, exhaustive_limit=EXHAUSTIVE_LIMIT,
                    force_exhaustive=False):
    """((xy)z)y = x((yz)y), same reporting contract as check_left_bol."""
    return _bol_check(loop, True, mode, samples, seed, exhaustive_limit,
                      force_exhaustive)


def _bol_check(loop, right, mode, samples, seed, exhaustive_limit,
               force_exhaustive):
    mode = _resolve_mode(loop.order, mode, exhaustive_limit, force_exhaustive)
    if mode == "exhaustive":
        scan = (kernels.right_bol_exhaustive if right
                else kernels.left_bol_exhaustive)
        x, y, z = scan(loop.table)
        if x < 0:
            return BolCheck(holds=True, mode="exhaustive")
        return BolCheck(holds=False, mode="exhaustive", witness=(x, y, z))
    holds, witness = kernels.bol_sampled(loop.table, samples, seed,
                                         right=right)
    return BolCheck(holds=holds, mode="sampled", witness=witness,
                    samples=samples, seed=seed)


def check_moufang(loop, **kwargs):
    """Moufang = left Bol and right Bol; the witness is the first failure
    of whichever identity fails (left checked first)."""
    left = check_left_bol(loop, **kwargs)
    if not left.holds:
        return BolCheck(holds=False, mode=left.mode, witness=left.witness,
                        samples=left.samples, seed=left.seed)
    right = check_right_bol(loop, **kwargs)
    if not right.holds:
        return BolCheck(holds=False, mode=right.mode, witness=right.witness,
                        samples=right.samples, seed=right.seed)
    mode = "exhaustive" if (left.mode == right.mode == "exhaustive") \
        else "sampled"
    return BolCheck(holds=True, mode=mode, samples=left.samples,
                    seed=left.seed)


def is_associative(table, chunk=64):
    """(ab)c == a(bc) for all triples, chunked to bound memory."""
    t = np.asarray(table, dtype=np.int32)
    n = t.shape[0]
    for lo in range(0, n, chunk):
        rows = t[lo:lo + chunk]
        lhs = t[rows]                                            # (ab)c
        rhs = rows[:, t.reshape(-1)].reshape(rows.shape[0], n, n)  # a(bc)
        if not np.array_equal(lhs, rhs):
            return False
    return True


# -- normal subloops via congruences ---------------------------------------

@dataclasses.dataclass
class NormalSubloop:
    """The congruence class of the identity plus its full partition."""
    elements: tuple            # sorted indices, always containing 0
    labels: np.ndarray         # class label (smallest member) per index

    @property
    def order(self):
        return len(self.elements)

    def classes(self):
        out = {}
        for i, lab in enumerate(self.labels):
            out.setdefault(int(lab), []).append(i)
        return [tuple(v) for _, v in sorted(out.items())]


def _partition_is_congruence(table, labels):
    """Classes have uniform size, are permuted by all translations, and the
    class of 0 is closed under the table (the direct normality predicate
    xK = Kx, x(yK) = (xy)K, (Kx)y = K(xy) in partition form)."""
    t = np.asarray(table)
    n = t.shape[0]
    labels = np.asarray(labels)
    _, counts = np.unique(labels, return_counts=True)
    if len(set(counts.tolist())) != 1:
        return False
    # translations act on classes: the label of u*x (and x*u) must depend
    # only on the label of x; labels[i] is itself a member of i's class,
    # so comparing against the class representative covers every pair
    m = labels[t]
    if not (np.array_equal(m, m[:, labels]) and np.array_equal(m, m[labels])):
        return False
    k = np.flatnonzero(labels == labels[0])
    sub = t[np.ix_(k, k)]
    return bool(np.isin(sub, k).all())


def normal_closure_congruence(loop, a):
    """Smallest normal subloop containing element a, as the identity class
    of the congruence generated by merging 0 with a."""
    n = loop.order
    if a == 0:
        return NormalSubloop(elements=(0,),
                             labels=np.arange(n, dtype=np.int32))
    labels = kernels.congruence_close(loop.table, [(0, a)])
    k = tuple(int(i) for i in np.flatnonzero(labels == 0))
    sub = NormalSubloop(elements=k, labels=labels)
    if 1 < len(k) < n and not _partition_is_congruence(loop.table, labels):
        raise AssertionError("congruence closure failed the direct "
                             "normality predicate")
    return sub


def is_simple(loop):
    """No element's normal closure is proper (early exit on failure)."""
    for a in range(1, loop.order):
        labels = kernels.congruence_close(loop.table, [(0, a)])
        if int(np.flatnonzero(labels == 0).size) != loop.order:
            return False
    return True


def all_normal_subloops(loop, gate=CONGRUENCE_GATE):
    """Every normal subloop, as joins of element normal-closures."""
    n = loop.order
    if n > gate:
        raise SizeGate("order %d above gate %d; use is_simple" % (n, gate))
    found = {}
    trivial = normal_closure_congruence(loop, 0)
    found[trivial.elements] = trivial
    atoms = []
    for a in range(1, n):
        sub = normal_closure_congruence(loop, a)
        if sub.elements not in found:
            found[sub.elements] = sub
            atoms.append(sub)
    # close under joins
    worklist = list(found.values())
    while worklist:
        cur = worklist.pop()
        for atom in atoms:
            if set(atom.elements) <= set(cur.elements):
                continue
            pairs = [(0, x) for x in cur.elements + atom.elements if x != 0]
            labels = kernels.congruence_close(loop.table, pairs)
            k = tuple(int(i) for i in np.flatnonzero(labels == 0))
            if k not in found:
                sub = NormalSubloop(elements=k, labels=labels)
                found[k] = sub
                worklist.append(sub)
    return sorted(found.values(), key=lambda s: (s.order, s.elements))


def q_prime_is_q(loop):
    """Whether the commutator-associator subloop is the whole loop, decided
    through the left multiplication group: Q = Q' iff Lmlt(Q)' is
    transitive on Q."""
    n = loop.order
    kept, _ = reduce_generators(lmlt_generators(loop), n)
    if not kept:
        return n == 1
    arrs = [np.array(g.images) for g in kept]
    invs = [np.array(g.inverse().images) for g in kept]
    comms = []
    seen = set()
    for (a, ai), (b, bi) in itertools.product(zip(arrs, invs), repeat=2):
        c = ai[bi[a[b]]]
        key = c.tobytes()
        if key not in seen:
            seen.add(key)
            comms.append(c)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = []

    def union(p, q):
        rp, rq = find(p), find(q)
        if rp != rq:
            parent[max(rp, rq)] = min(rp, rq)
            queue.append((p, q))

    for c in comms:
        for p in range(n):
            union(p, int(c[p]))
    head = 0
    while head < len(queue):
        p, q = queue[head]
        head += 1
        for g in arrs:
            union(int(g[p]), int(g[q]))
    return len({find(i) for i in range(n)}) == 1


def _assoc_comm_pairs(table, chunk=64):
    """Distinct pairs ((xy)z, x(yz)) and (xy, yx) that differ."""
    t = np.asarray(table, dtype=np.int64)
    n = t.shape[0]
    enc = []
    a, b = t, t.T
    m = a != b
    if m.any():
        enc.append(a[m] * n + b[m])
    for lo in range(0, n, chunk):
        rows = t[lo:lo + chunk]
        lhs = t[rows]                                   # (x, y, z) -> (xy)z
        rhs = rows[:, t.reshape(-1)].reshape(lhs.shape)  # x(yz)
        m = lhs != rhs
        if m.any():
            enc.append(np.unique(lhs[m] * n + rhs[m]))
    if not enc:
        return np.empty((0, 2), dtype=np.int64)
    codes = np.unique(np.concatenate(enc))
    return np.stack([codes // n, codes % n], axis=1)


def commutator_associator_subloop(loop, gate=CONGRUENCE_GATE):
    """Smallest normal subloop with an abelian-group quotient."""
    n = loop.order
    if n > gate:
        raise SizeGate("order %d above gate %d" % (n, gate))
    pairs = _assoc_comm_pairs(loop.table)
    if len(pairs) == 0:
        labels = np.arange(n, dtype=np.int32)
        return NormalSubloop(elements=(0,), labels=labels)
    labels = kernels.congruence_close(loop.table, pairs)
    k = tuple(int(i) for i in np.flatnonzero(labels == 0))
    sub = NormalSubloop(elements=k, labels=labels)
    if len(k) < n:
        q = quotient_loop(loop, sub)
        if not (is_associative(q.table)
                and np.array_equal(q.table, q.table.T)):
            raise AssertionError("quotient by Q' is not an abelian group")
    return sub


def quotient_loop(loop, normal_subloop):
    """Table on the congruence classes; the class of 0 becomes index 0."""
    labels = np.asarray(normal_subloop.labels)
    if not _partition_is_congruence(loop.table, labels):
        raise NotNormal("partition is not a loop congruence")
    classes = sorted({int(l) for l in labels})
    relabel = {lab: i for i, lab in enumerate(classes)}
    reps = {relabel[lab]: lab for lab in classes}   # class min as rep
    m = len(classes)
    qt = [[relabel[int(labels[loop.table[reps[i], reps[j]]])]
           for j in range(m)] for i in range(m)]
    q = CayleyLoop(qt)
    if not is_loop(q.table):
        raise NotNormal("quotient table is not a loop")
    return q


def is_solvable_loop(loop, gate=CONGRUENCE_GATE):
    """Iterate Q <- Q / Q' until trivial (True) or stationary (False)."""
    current = loop
    while current.order > 1:
        sub = commutator_associator_subloop(current, gate=gate)
        if sub.order == current.order:
            # Q' = Q with order > 1: the series can never reach 1
            return False
        if sub.order == 1:
            # Q' trivial: Q is an abelian group
            return True
        current = quotient_loop(current, sub)
    return True


# -- isotopes and isomorphism ----------------------------------------------

def principal_isotope(loop, a, b):
    """x∘y = R_b^{-1}(x) * L_a^{-1}(y), with the new identity a*b swapped
    down to index 0."""
    t = loop.table
    n = loop.order
    rb_inv = np.empty(n, dtype=np.int64)
    rb_inv[t[:, b]] = np.arange(n)
    la_inv = np.empty(n, dtype=np.int64)
    la_inv[t[a]] = np.arange(n)
    iso = t[np.ix_(rb_inv, la_inv)]
    e = int(t[a, b])
    if e != 0:
        swap = np.arange(n)
        swap[0], swap[e] = e, 0
        iso = swap[iso][np.ix_(swap, swap)]
    return CayleyLoop(iso)


def _translation_orders(table):
    n = table.shape[0]
    out = []
    for x in range(n):
        row = Permutation(table[x]).order()
        col = Permutation(table[:, x]).order()
        out.append((row, col))
    return out


def _refined_invariants(table):
    t = np.asarray(table)
    n = t.shape[0]
    inv = _translation_orders(t)
    for _ in range(2):
        nxt = []
        for x in range(n):
            row_sig = tuple(sorted(inv[int(v)] for v in t[x]))
            col_sig = tuple(sorted(inv[int(v)] for v in t[:, x]))
            nxt.append((inv[x], hash((row_sig, col_sig))))
        inv = nxt
    return inv


def loops_isomorphic(L1, L2, gate=ISO_GATE):
    """Backtracking isomorphism search fixing the identity, pruned by
    translation-order invariants.  Returns (found, mapping_or_None)."""
    if L1.order != L2.order:
        return False, None
    n = L1.order
    if n > gate:
        raise SizeGate("order %d above gate %d" % (n, gate))
    inv1 = _refined_invariants(L1.table)
    inv2 = _refined_invariants(L2.table)
    if sorted(inv1) != sorted(inv2):
        return False, None
    t1 = L1.table
    t2 = L2.table
    mapping = [-1] * n
    used = [False] * n
    assigned = []

    def try_assign(a0, b0):
        trail = []
        stack = [(a0, b0)]
        while stack:
            x, y = stack.pop()
            if mapping[x] != -1:
                if mapping[x] != y:
                    return False, trail
                continue
            if used[y] or inv1[x] != inv2[y]:
                return False, trail
            mapping[x] = y
            used[y] = True
            assigned.append(x)
            trail.append(x)
            for w in assigned:
                mw = mapping[w]
                stack.append((int(t1[x, w]), int(t2[y, mw])))
                stack.append((int(t1[w, x]), int(t2[mw, y])))
        return True, trail

    def undo(trail):
        for x in reversed(trail):
            used[mapping[x]] = False
            mapping[x] = -1
            assigned.pop()

    def search():
        try:
            a = mapping.index(-1)
        except ValueError:
            return True
        for b in range(n):
            if used[b] or inv1[a] != inv2[b]:
                continue
            ok, trail = try_assign(a, b)
            if ok and search():
                return True
            undo(trail)
        return False

    ok, trail = try_assign(0, 0)
    if not ok:
        undo(trail)
        return False, None
    if search():
        return True, list(mapping)
    return False, None
