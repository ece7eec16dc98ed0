"""Exact factorization triples (X, Y0, Y1) and the unique decomposition
z = y0 * y1 that powers the loop product."""
from __future__ import annotations

from .errors import NotExact, NotFaithful, NotInGroup, NotSubgroup
from .perm import (FiniteGroup, Permutation, coset_action_is_faithful,
                   group_from_json, group_to_json, orbit)

#: precompute the decomposition table only up to this group order
DECOMP_TABLE_LIMIT = 200_000


class ExactFactorizationTriple:
    """A validated triple with Y0 ∩ Y1 = 1 and Y0*Y1 = X.

    ``decompose`` returns the unique (y0, y1) with z = y0*y1.  The table is
    precomputed for groups up to DECOMP_TABLE_LIMIT elements; above that,
    lookups scan the smaller factor and use stabilizer-chain membership in
    the other.
    """

    def __init__(self, X, Y0, Y1, faithful, _table=None):
        self.X = X
        self.Y0 = Y0
        self.Y1 = Y1
        self.faithful = faithful
        self._table = _table

    def decompose(self, z):
        """The unique (y0, y1) in Y0 x Y1 with z = y0*y1."""
        if self._table is not None:
            try:
                return self._table[z.images]
            except KeyError:
                raise NotInGroup("element is not in X") from None
        if z not in self.X:
            raise NotInGroup("element is not in X")
        for y0 in self.Y0.sorted_elements():
            y1 = y0.inverse() * z
            if y1 in self.Y1:
                return y0, y1
        raise NotInGroup("element has no Y0*Y1 decomposition")

    def to_json(self):
        return {"X": group_to_json(self.X),
                "Y0": group_to_json(self.Y0),
                "Y1": group_to_json(self.Y1),
                "faithful": self.faithful}

    @classmethod
    def from_json(cls, data, allow_unfaithful=False):
        return validate(group_from_json(data["X"]),
                        group_from_json(data["Y0"]),
                        group_from_json(data["Y1"]),
                        allow_unfaithful=allow_unfaithful)

    def __repr__(self):
        return ("ExactFactorizationTriple(|X|=%d, |Y0|=%d, |Y1|=%d, "
                "faithful=%r)" % (self.X.order, self.Y0.order,
                                  self.Y1.order, self.faithful))


def validate(X, Y0, Y1, allow_unfaithful=False):
    """Check subgroup containment, exactness and faithfulness; return the
    validated triple with its decomposition machinery in place."""
    for name, Y in (("Y0", Y0), ("Y1", Y1)):
        if Y.degree != X.degree or not Y.is_subgroup_of(X):
            raise NotSubgroup("%s is not a subgroup of X" % name)
    if Y0.order * Y1.order != X.order:
        raise NotExact("|Y0|*|Y1| = %d != |X| = %d"
                       % (Y0.order * Y1.order, X.order))
    small, big = (Y0, Y1) if Y0.order <= Y1.order else (Y1, Y0)
    for a in small.elements():
        if not a.is_identity() and a in big:
            raise NotExact("Y0 and Y1 intersect nontrivially")

    table = None
    if X.order <= DECOMP_TABLE_LIMIT:
        table = {}
        for y0 in Y0.sorted_elements():
            for y1 in Y1.sorted_elements():
                z = y0 * y1
                if z.images in table:
                    raise NotExact("duplicate decomposition for %r" % z)
                table[z.images] = (y0, y1)
        if len(table) != X.order:
            raise NotExact("Y0*Y1 does not cover X")

    faithful = (coset_action_is_faithful(X, Y0)
                and coset_action_is_faithful(X, Y1))
    if not faithful and not allow_unfaithful:
        raise NotFaithful("a factor contains a nontrivial normal subgroup")
    return ExactFactorizationTriple(X, Y0, Y1, faithful, _table=table)


def decompose(T, z):
    return T.decompose(z)


def regular_on_cosets(T):
    """Whether Y0 acts regularly on the coset space X/Y1 (single orbit of
    full size with trivial point stabilizers).  Uses the point action when
    Y1 is a point stabilizer, which covers the catalog."""
    X, Y0, Y1 = T.X, T.Y0, T.Y1
    index = X.order // Y1.order
    for p in range(X.degree):
        if all(g(p) == p for g in Y1.generators) and \
                len(orbit(X.generators, p)) == index and \
                Y1.order * index == X.order:
            orb = orbit(Y0.generators, p)
            if len(orb) != index or Y0.order != index:
                return False
            return all(y.is_identity() or y(p) != p for y in Y0.elements())
    # generic route: label cosets through the decomposition table
    if T._table is None:
        raise NotInGroup("no decomposition table and Y1 is not a point "
                         "stabilizer")
    reps = sorted({T.decompose(z)[0] for z in X.elements()})
    if len(reps) != index or Y0.order != index:
        return False
    # Y0 permutes {y0 Y1}; regular iff the left action of Y0 on the y0
    # representatives is free and transitive
    repset = {r.images for r in reps}
    for y in Y0.elements():
        if y.is_identity():
            continue
        fixed = any((y * r) in _coset(r, T) for r in reps)
        if fixed:
            return False
    return True


def _coset(rep, T):
    return {(rep * y1) for y1 in T.Y1.elements()}
