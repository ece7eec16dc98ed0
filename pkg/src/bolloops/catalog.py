"""The three finite example families as ready-made validated triples.

Families:
  sym        X = S_n, Y0 = <n-cycle>, Y1 = S_{n-1}  (n >= 3)
  psl-singer X = GL(n,2) on nonzero vectors, Y0 = Singer cycle,
             Y1 = point stabilizer  (n in {3,4,5})
  f27        X = {z -> a z^tau + b}, |X| = 1053, on the 27 field elements
"""
from __future__ import annotations

import dataclasses
import itertools
import math

from . import factorization
from .algebra import (F27_ADD, F27_MUL, f27_multiplicative_generator,
                      frobenius, gl2_as_permutation_group)
from .errors import InvalidParameter
from .perm import (FiniteGroup, Permutation, generate, orbit,
                   reduce_generators)


@dataclasses.dataclass
class CatalogEntry:
    family: str
    parameters: dict
    triple: factorization.ExactFactorizationTriple
    socle_gens: tuple | None
    expected: dict

    @property
    def loop_order(self):
        return self.triple.X.order


def sym_triple(n):
    """X = S_n with Y0 the n-cycle and Y1 the stabilizer of point n-1.

    All n >= 3 are accepted; the structural claims (nonsolvability,
    simplicity for n >= 6) only apply to even n, which the notes record.
    """
    if n < 3:
        raise InvalidParameter("sym family needs n >= 3")
    cycle = Permutation([(i + 1) % n for i in range(n)])
    swap = Permutation.from_cycles("(0 1)", n)
    X = FiniteGroup([swap, cycle])
    Y0 = generate([cycle])
    y1gens = [swap] if n == 3 else \
        [swap, Permutation(list(range(1, n - 1)) + [0, n - 1])]
    Y1 = FiniteGroup(y1gens)
    # n = 3 is the one degenerate case: the 3-cycle subgroup is normal
    triple = factorization.validate(X, Y0, Y1, allow_unfaithful=(n == 3))
    socle = None
    if n >= 5:
        socle = tuple(Permutation.from_cycles("(%d %d %d)" % (i, i + 1, i + 2), n)
                      for i in range(n - 2))
    notes = []
    if n == 3:
        notes.append("unfaithful: the 3-cycle subgroup is normal in S_3")
    if n % 2 == 1:
        notes.append("odd n: the nonsolvability condition fails "
                     "(the n-cycle is even)")
    if n < 6:
        notes.append("simplicity criterion needs n >= 6")
    return CatalogEntry(
        family="sym", parameters={"n": n}, triple=triple,
        socle_gens=socle,
        expected={"loop_order": math.factorial(n),
                  "simple": n % 2 == 0,
                  "proper": n % 2 == 0,
                  "notes": "; ".join(notes)})


def psl_singer_triple(n):
    """X = PSL(n,2) = GL(n,2), Y0 a Singer cycle, Y1 a point stabilizer."""
    g = gl2_as_permutation_group(n)
    triple = factorization.validate(g.X, g.Y0, g.Y1)
    return CatalogEntry(
        family="psl-singer", parameters={"n": n}, triple=triple,
        socle_gens=tuple(g.X.generators),
        expected={"loop_order": g.X.order, "simple": True, "proper": True,
                  "notes": "simple and proper by the almost-simple "
                           "criterion (socle = X)"})


def _affine_perm(a, tau, b):
    """z -> a * z^tau + b as a permutation of the 27 field elements."""
    return Permutation(int(F27_ADD[F27_MUL[a, frobenius(z, tau)], b])
                       for z in range(27))


def _index3_regular_subgroups(U):
    """Order-27 subgroups of the order-81 group U that act regularly,
    via pullbacks of hyperplanes in U modulo <U', cubes>."""
    elems = U.sorted_elements()
    seeds = []
    for a, b in itertools.product(U.generators, repeat=2):
        seeds.append(a.inverse() * b.inverse() * a * b)
    seeds += [e * e * e for e in elems]
    seeds = [s for s in seeds if not s.is_identity()]
    K = generate(seeds) if seeds else FiniteGroup.trivial(U.degree)
    kset = K.elements()
    # cosets of K in U form an elementary abelian 3-group
    reps = []
    label = {}
    for e in elems:
        if e.images in label:
            continue
        r = len(reps)
        reps.append(e)
        for k in sorted(kset):
            label[(e * k).images] = r
    rank = 0
    m = len(reps)
    while 3 ** rank < m:
        rank += 1
    if 3 ** rank != m:
        raise AssertionError("U/K is not elementary abelian of 3-power order")
    # greedy basis for the quotient: any coset outside the current span
    basis_reps = []
    coord_of = _span(reps, label, basis_reps, rank, m)
    while len(coord_of) < m:
        r = next(c for c in range(m) if c not in coord_of)
        basis_reps.append(r)
        coord_of = _span(reps, label, basis_reps, rank, m)
    if len(basis_reps) != rank:
        raise AssertionError("quotient basis has wrong rank")
    hyperplanes = []
    for normal in itertools.product(range(3), repeat=rank):
        if all(v == 0 for v in normal):
            continue
        # normalize: first nonzero coordinate = 1, to dedupe +/- multiples
        first = next(v for v in normal if v)
        if first != 1:
            continue
        members = [c for c, vec in coord_of.items()
                   if sum(a * b for a, b in zip(normal, vec)) % 3 == 0]
        sub_elems = [e for e in elems if label[e.images] in set(members)]
        hyperplanes.append(FiniteGroup.from_elements(sub_elems))
    out = []
    for H in hyperplanes:
        if H.order != 27:
            continue
        if len(orbit(H.generators, 0)) == 27:
            out.append(H)
    return out


def _span(reps, label, basis_reps, rank, m):
    """Coordinates of every coset over the chosen basis cosets."""
    coord_of = {0: tuple([0] * rank)}
    frontier = [0]
    while frontier:
        c = frontier.pop()
        vec = coord_of[c]
        for bi, r in enumerate(basis_reps):
            nc = label[(reps[c] * reps[r]).images]
            if nc not in coord_of:
                nvec = list(vec)
                nvec[bi] = (nvec[bi] + 1) % 3
                coord_of[nc] = tuple(nvec)
                frontier.append(nc)
    return coord_of


def f27_triple():
    """The order-1053 odd example: X = {z -> a z^tau + b} with a a nonzero
    square; Y1 = stabilizer of 0; Y0 a regular order-27 subgroup of the
    Sylow 3-subgroup U = {z -> z^tau + b}, distinct from the translations.
    """
    gen = f27_multiplicative_generator()
    sq = int(F27_MUL[gen, gen])            # generator of the 13 squares
    scale = _affine_perm(sq, 0, 0)
    frob = _affine_perm(1, 1, 0)
    shift = _affine_perm(1, 0, 1)
    X = FiniteGroup([scale, frob, shift])
    Y1 = FiniteGroup([scale, frob])
    # shifts by 1, x, x^2: 1 and x alone only span a Frobenius-stable
    # 9-element subgroup of the translations (x^3 = x + 1)
    U = FiniteGroup([frob, shift, _affine_perm(1, 0, 3),
                     _affine_perm(1, 0, 9)])
    translations = frozenset(_affine_perm(1, 0, b) for b in range(27))
    candidates = [H for H in _index3_regular_subgroups(U)
                  if frozenset(H.elements()) != translations]
    if not candidates:
        raise AssertionError("no regular order-27 subgroup besides the "
                             "translations")
    candidates.sort(key=lambda H: sorted(e.images for e in H.elements()))
    chosen = candidates[0]
    kept, _ = reduce_generators(chosen.sorted_elements(), 27)
    Y0 = FiniteGroup(kept)
    triple = factorization.validate(X, Y0, Y1)
    return CatalogEntry(
        family="f27", parameters={}, triple=triple, socle_gens=None,
        expected={"loop_order": 1053, "simple": True, "proper": True,
                  "notes": "odd order 1053 = 3^4 * 13; simplicity checked "
                           "by congruence closure"})


def get_entry(family, n=None):
    if family == "sym":
        if n is None:
            raise InvalidParameter("sym family needs --n")
        return sym_triple(n)
    if family == "psl-singer":
        if n is None:
            raise InvalidParameter("psl-singer family needs --n")
        return psl_singer_triple(n)
    if family == "f27":
        return f27_triple()
    raise InvalidParameter("unknown family %r" % family)


def default_entries():
    """The rows shown by `catalog list`."""
    return [("sym", {"n": 4}, 24), ("sym", {"n": 6}, 720),
            ("psl-singer", {"n": 3}, 168), ("psl-singer", {"n": 4}, 20160),
            ("f27", {}, 1053)]
