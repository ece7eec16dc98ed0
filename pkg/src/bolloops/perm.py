"""Permutations and finite permutation groups.

Points are 0-indexed.  The composition convention is (f*g)(x) = f(g(x))
everywhere; all translation identities elsewhere in the package are stated
under this convention.
"""
from __future__ import annotations

import itertools
import re

import numpy as np

from .errors import CapExceeded, DegreeMismatch

#: default cap for full element enumeration
ENUM_CAP = 2_000_000

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """A bijection on {0, ..., n-1}, stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        n = len(images)
        if n < 1:
            raise ValueError("degree must be at least 1")
        seen = bytearray(n)
        for x in images:
            if x < 0 or x >= n or seen[x]:
                raise ValueError("images do not form a bijection: %r" % (images,))
            seen[x] = 1
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self):
        return len(self.images)

    @classmethod
    def identity(cls, degree):
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, spec, degree):
        """Parse cycle notation like "(0 1 2 3)(4 5)"; commas also accepted."""
        images = list(range(degree))
        stripped = spec.replace(",", " ").strip()
        consumed = _CYCLE_RE.sub("", stripped).strip()
        if consumed:
            raise ValueError("could not parse cycle notation: %r" % spec)
        for m in _CYCLE_RE.finditer(stripped):
            pts = [int(t) for t in m.group(1).split()]
            if any(p < 0 or p >= degree for p in pts):
                raise ValueError("cycle point out of range for degree %d" % degree)
            if len(set(pts)) != len(pts):
                raise ValueError("repeated point in cycle: %r" % spec)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls(images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        """Composition: (self*other)(x) = self(other(x))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeMismatch(
                "degree %d vs %d" % (self.degree, other.degree))
        s = self.images
        return Permutation(s[x] for x in other.images)

    def inverse(self):
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(inv)

    def is_identity(self):
        return all(i == x for i, x in enumerate(self.images))

    def first_moved(self):
        """Smallest moved point, or None for the identity."""
        for i, x in enumerate(self.images):
            if i != x:
                return i
        return None

    def order(self):
        n = 1
        p = self
        while not p.is_identity():
            p = p * self
            n += 1
        return n

    def cycles(self):
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            j = self.images[i]
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_string(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(%s)" % " ".join(map(str, c)) for c in cycs)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Permutation(%r)" % (list(self.images),)


def compose(f, g):
    """(f∘g)(x) = f(g(x))."""
    return f * g


def inverse(f):
    return f.inverse()


def _as_array(p):
    return np.array(p.images, dtype=np.int32)


def _arr_inverse(a):
    inv = np.empty_like(a)
    inv[a] = np.arange(len(a), dtype=a.dtype)
    return inv


def _first_moved_arr(a):
    nz = np.nonzero(a != np.arange(len(a), dtype=a.dtype))[0]
    return int(nz[0]) if len(nz) else None


class StabilizerChain:
    """Deterministic Schreier-Sims stabilizer chain.

    Base points are chosen greedily as the first moved point of whatever
    residue forces a new level, so the chain is reproducible.
    """

    def __init__(self, gens, degree):
        self.degree = degree
        self.base = []
        self._gens = []      # per level: generators fixing base[:i]
        self._orbits = []    # per level: dict point -> transversal array
        arrs = []
        seen = set()
        for g in gens:
            a = _as_array(g) if isinstance(g, Permutation) else np.asarray(g, np.int32)
            key = a.tobytes()
            if key in seen or _first_moved_arr(a) is None:
                continue
            seen.add(key)
            arrs.append(a)
        self._id = np.arange(degree, dtype=np.int32)
        self._build(arrs)

    # -- construction ------------------------------------------------------

    def _new_level(self, point):
        self.base.append(point)
        self._gens.append([])
        self._orbits.append({})

    def _recompute_orbit(self, i):
        b = self.base[i]
        tr = {b: self._id}
        queue = [b]
        gens = self._gens[i]
        while queue:
            p = queue.pop(0)
            rep = tr[p]
            for s in gens:
                q = int(s[p])
                if q not in tr:
                    tr[q] = s[rep]
                    queue.append(q)
        self._orbits[i] = tr

    def _strip(self, g, start):
        for i in range(start, len(self.base)):
            x = int(g[self.base[i]])
            tr = self._orbits[i]
            if x not in tr:
                return g, i
            g = _arr_inverse(tr[x])[g]
        return g, len(self.base)

    def _add_gen(self, h, lo, hi):
        """Install h as a strong generator at levels lo..hi inclusive."""
        if hi == len(self.base):
            self._new_level(_first_moved_arr(h))
        for l in range(lo, hi + 1):
            self._gens[l].append(h)
        for l in range(lo, hi + 1):
            self._recompute_orbit(l)

    def _close_level(self, i):
        """Process Schreier generators of level i; return new level to
        revisit, or None if the level is already closed."""
        tr = self._orbits[i]
        b = self.base[i]
        for p in list(tr.keys()):
            rep = tr[p]
            for s in list(self._gens[i]):
                u = s[rep]
                x = int(u[b])
                schreier = _arr_inverse(tr[x])[u]
                h, j = self._strip(schreier, i + 1)
                if _first_moved_arr(h) is not None:
                    self._add_gen(h, i + 1, j)
                    return j
        return None

    def _build(self, arrs):
        if not arrs:
            return
        for a in arrs:
            if all(a[b] == b for b in self.base):
                self._new_level(_first_moved_arr(a))
        for a in arrs:
            lvl = 0
            self._gens[0].append(a)
            while lvl < len(self.base) and a[self.base[lvl]] == self.base[lvl]:
                lvl += 1
                self._gens[lvl].append(a)
        for i in range(len(self.base)):
            self._recompute_orbit(i)
        i = len(self.base) - 1
        while i >= 0:
            j = self._close_level(i)
            i = i - 1 if j is None else j

    # -- queries -----------------------------------------------------------

    @property
    def order(self):
        n = 1
        for tr in self._orbits:
            n *= len(tr)
        return n

    def contains(self, p):
        a = _as_array(p) if isinstance(p, Permutation) else np.asarray(p, np.int32)
        if len(a) != self.degree:
            return False
        h, j = self._strip(a, 0)
        return j == len(self.base) and _first_moved_arr(h) is None


def reduce_generators(gens, degree):
    """Filter a generating list down to members that each enlarge the
    generated group.  Returns (kept, chain); the kept list generates the
    same group as the input."""
    kept = []
    chain = StabilizerChain([], degree)
    for g in gens:
        if isinstance(g, Permutation) and g.is_identity():
            continue
        if chain.contains(g):
            continue
        kept.append(g)
        chain = StabilizerChain(kept, degree)
    return kept, chain


def group_order_schreier(gens):
    """Group order via a stabilizer chain; never enumerates elements."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    degree = gens[0].degree
    _, chain = reduce_generators(gens, degree)
    return chain.order


class FiniteGroup:
    """A finite permutation group given by generators.

    Elements are materialized on demand (bounded by ``cap``); the order is
    also available without enumeration through a stabilizer chain.
    """

    def __init__(self, generators, cap=ENUM_CAP):
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.images in seen:
                continue
            seen.add(g.images)
            gens.append(g)
        if not gens:
            raise ValueError("need at least one generator")
        degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch("generators of mixed degree")
        self.degree = degree
        self.generators = tuple(gens)
        self.cap = cap
        self._elements = None
        self._chain = None
        self._order = None

    @classmethod
    def from_elements(cls, elements, cap=ENUM_CAP):
        elems = frozenset(elements)
        g = cls(sorted(elems), cap=cap)
        g._elements = elems
        g._order = len(elems)
        return g

    @classmethod
    def trivial(cls, degree):
        return cls.from_elements([Permutation.identity(degree)])

    def elements(self):
        """The full element set (BFS closure of the generators)."""
        if self._elements is None:
            ident = Permutation.identity(self.degree)
            seen = {ident}
            frontier = [ident]
            while frontier:
                nxt = []
                for g in frontier:
                    for s in self.generators:
                        h = s * g
                        if h not in seen:
                            if len(seen) >= self.cap:
                                raise CapExceeded(
                                    "closure grew past cap %d" % self.cap)
                            seen.add(h)
                            nxt.append(h)
                frontier = nxt
            self._elements = frozenset(seen)
            if self._order is not None and self._order != len(seen):
                raise AssertionError("chain order disagrees with enumeration")
            self._order = len(seen)
        return self._elements

    def sorted_elements(self):
        """Elements sorted lexicographically by image tuple (identity first)."""
        return sorted(self.elements())

    @property
    def order(self):
        if self._order is None:
            self._order = self.chain().order
        return self._order

    def chain(self):
        if self._chain is None:
            _, self._chain = reduce_generators(self.generators, self.degree)
        return self._chain

    def __contains__(self, p):
        if not isinstance(p, Permutation) or p.degree != self.degree:
            return False
        if self._elements is not None:
            return p in self._elements
        return self.chain().contains(p)

    def is_subgroup_of(self, other):
        return self.degree == other.degree and all(
            g in other for g in self.generators)

    def __repr__(self):
        return "FiniteGroup(degree=%d, ngens=%d)" % (
            self.degree, len(self.generators))


def generate(gens, cap=ENUM_CAP):
    """Materialize the group generated by ``gens`` (raises CapExceeded)."""
    g = FiniteGroup(gens, cap=cap)
    g.elements()
    return g


def normal_closure(ambient_gens, seed_gens, degree):
    """Generators of the normal closure of <seed_gens> in <ambient_gens>."""
    kept, chain = reduce_generators(list(seed_gens), degree)
    if not kept:
        return [Permutation.identity(degree)]
    ginv = [(g, g.inverse()) for g in ambient_gens]
    stable = False
    while not stable:
        stable = True
        for h in list(kept):
            for g, gi in ginv:
                c = gi * h * g
                if not chain.contains(c):
                    kept.append(c)
                    chain = StabilizerChain(kept, degree)
                    stable = False
    return kept


def derived_subgroup(G, cap=None):
    """The commutator subgroup, as the normal closure of generator
    commutators."""
    cap = cap if cap is not None else G.cap
    comms = []
    for a, b in itertools.product(G.generators, repeat=2):
        c = a.inverse() * b.inverse() * a * b
        if not c.is_identity():
            comms.append(c)
    if not comms:
        return FiniteGroup.trivial(G.degree)
    gens = normal_closure(G.generators, comms, G.degree)
    return FiniteGroup(gens, cap=cap)


def is_solvable_group(G):
    """True iff the derived series reaches the trivial group."""
    current = G
    prev_order = None
    while True:
        order = current.order
        if order == 1:
            return True
        if prev_order is not None and order == prev_order:
            return False
        prev_order = order
        current = derived_subgroup(current)


def core_in(G, Y):
    """Largest normal subgroup of G contained in Y, via the kernel of the
    left-coset action of G on G/Y.  Requires G to be enumerable."""
    elems = G.sorted_elements()
    ysorted = Y.sorted_elements()
    label = {}
    reps = []
    for g in elems:
        if g.images in label:
            continue
        r = len(reps)
        reps.append(g)
        for y in ysorted:
            label[(g * y).images] = r
    kernel = [g for g in elems
              if all(label[(g * r).images] == label[r.images] for r in reps)]
    return FiniteGroup.from_elements(kernel)


def coset_action_is_faithful(G, Y):
    """Whether the action of G on left cosets of Y is faithful, i.e. the
    core of Y in G is trivial.

    Cheaper than :func:`core_in` in two scale cases: when Y is the full
    stabilizer of a point in the natural action (the coset action is then a
    copy of the faithful point action), and when Y is small enough to test
    each element's conjugation orbit directly.
    """
    # point-stabilizer shortcut
    for p in range(G.degree):
        if all(g(p) == p for g in Y.generators):
            orb = orbit(G.generators, p)
            if Y.order * len(orb) == G.order:
                return True
    if G.order <= G.cap:
        return core_in(G, Y).order == 1
    yelems = Y.elements()
    nontrivial = False
    for y in yelems:
        if y.is_identity():
            continue
        # does the conjugation orbit of y stay inside Y?
        seen = {y.images}
        queue = [y]
        inside = True
        while queue and inside:
            h = queue.pop()
            for g in G.generators:
                c = g.inverse() * h * g
                if c not in yelems:
                    inside = False
                    break
                if c.images not in seen:
                    seen.add(c.images)
                    queue.append(c)
        if inside:
            nontrivial = True
            break
    if not nontrivial:
        return True
    raise CapExceeded("cannot decide core triviality without enumerating G")


def subgroup_product_is_group(G, A, B):
    """Whether the set AB covers G; returns (covers, |AB|) with
    |AB| = |A|*|B|/|A∩B|."""
    if A.order <= B.order:
        small, big = A, B
    else:
        small, big = B, A
    inter = sum(1 for a in small.elements() if a in big)
    size = A.order * B.order // inter
    return size == G.order, size


def orbit(gens, point):
    """Orbit of a point under the generated group (flood fill)."""
    seen = {point}
    queue = [point]
    while queue:
        p = queue.pop()
        for g in gens:
            q = g(p)
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return seen


def is_transitive(gens, domain_size):
    gens = list(gens)
    if not gens:
        return domain_size == 1
    return len(orbit(gens, 0)) == domain_size


# -- serialization ---------------------------------------------------------

def perm_to_json(p):
    return list(p.images)


def perm_from_json(data, degree=None):
    if isinstance(data, str):
        if degree is None:
            raise ValueError("cycle notation needs an explicit degree")
        return Permutation.from_cycles(data, degree)
    return Permutation(data)


def group_to_json(G):
    return {"degree": G.degree,
            "generators": [perm_to_json(g) for g in G.generators]}


def group_from_json(data, cap=ENUM_CAP):
    degree = int(data["degree"])
    gens = [perm_from_json(g, degree) for g in data["generators"]]
    return FiniteGroup(gens, cap=cap)
