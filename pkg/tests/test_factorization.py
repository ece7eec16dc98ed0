"""Exact factorization triple tests."""
import pytest

from bolloops import factorization
from bolloops.errors import NotExact, NotFaithful, NotInGroup, NotSubgroup
from bolloops.factorization import ExactFactorizationTriple, regular_on_cosets
from bolloops.perm import FiniteGroup, Permutation, generate


def s_n(n):
    return FiniteGroup([Permutation.from_cycles("(0 1)", n),
                        Permutation([(i + 1) % n for i in range(n)])])


def s4_parts():
    s4 = s_n(4)
    c4 = generate([Permutation([1, 2, 3, 0])])
    s3 = FiniteGroup([Permutation.from_cycles("(0 1)", 4),
                      Permutation.from_cycles("(0 1 2)", 4)])
    return s4, c4, s3


class TestValidate:
    def test_s4_triple(self):
        s4, c4, s3 = s4_parts()
        t = factorization.validate(s4, c4, s3)
        assert t.faithful
        assert t.X.order == 24 and t.Y0.order == 4 and t.Y1.order == 6

    def test_not_exact_size(self):
        s4, _, s3 = s4_parts()
        c2 = generate([Permutation([1, 0, 2, 3])])
        with pytest.raises(NotExact):
            factorization.validate(s4, c2, s3)

    def test_not_exact_intersection(self):
        s4, _, _ = s4_parts()
        # |C4| * |S3'| = 24 but both contain (0 1 2 3)-powers? use two
        # subgroups sharing a transposition
        d8 = generate([Permutation([1, 2, 3, 0]), Permutation([1, 0, 3, 2])])
        v = generate([Permutation([1, 0, 3, 2]), Permutation([0, 1, 3, 2])])
        assert d8.order * v.order == 32 != 24
        with pytest.raises(NotExact):
            factorization.validate(s4, d8, v)

    def test_not_faithful(self):
        s4, _, _ = s4_parts()
        c2 = generate([Permutation([1, 0, 2, 3])])
        a4 = generate([Permutation.from_cycles("(0 1 2)", 4),
                       Permutation.from_cycles("(1 2 3)", 4)])
        with pytest.raises(NotFaithful):
            factorization.validate(s4, c2, a4)
        t = factorization.validate(s4, c2, a4, allow_unfaithful=True)
        assert not t.faithful

    def test_not_subgroup(self):
        s4, c4, _ = s4_parts()
        other = generate([Permutation([1, 0, 2])])
        with pytest.raises(NotSubgroup):
            factorization.validate(s4, c4, other)
        a4 = generate([Permutation.from_cycles("(0 1 2)", 4),
                       Permutation.from_cycles("(1 2 3)", 4)])
        s3 = FiniteGroup([Permutation.from_cycles("(0 1)", 4),
                          Permutation.from_cycles("(0 1 2)", 4)])
        with pytest.raises(NotSubgroup):
            factorization.validate(a4, a4, s3)


class TestDecompose:
    def test_identity(self):
        s4, c4, s3 = s4_parts()
        t = factorization.validate(s4, c4, s3)
        y0, y1 = t.decompose(Permutation.identity(4))
        assert y0.is_identity() and y1.is_identity()

    def test_element_of_y0(self):
        s4, c4, s3 = s4_parts()
        t = factorization.validate(s4, c4, s3)
        c = Permutation([1, 2, 3, 0])
        y0, y1 = t.decompose(c)
        assert y0 == c and y1.is_identity()

    def test_against_exhaustive_oracle(self):
        s4, c4, s3 = s4_parts()
        t = factorization.validate(s4, c4, s3)
        oracle = {}
        for y0 in c4.elements():
            for y1 in s3.elements():
                oracle[(y0 * y1).images] = (y0, y1)
        assert len(oracle) == 24
        for z in s4.elements():
            assert t.decompose(z) == oracle[z.images]

    def test_recompose_bijection(self, psl3_entry):
        t = psl3_entry.triple
        seen = set()
        for z in t.X.elements():
            y0, y1 = t.decompose(z)
            assert y0 * y1 == z
            assert (y0.images, y1.images) not in seen
            seen.add((y0.images, y1.images))
        assert len(seen) == 168

    def test_not_in_group(self):
        s4, c4, s3 = s4_parts()
        t = factorization.validate(s4, c4, s3)
        with pytest.raises(NotInGroup):
            t.decompose(Permutation([1, 0, 2]))

    def test_lazy_path_matches_table(self):
        s4, c4, s3 = s4_parts()
        t = factorization.validate(s4, c4, s3)
        lazy = ExactFactorizationTriple(s4, c4, s3, True, _table=None)
        for z in s4.sorted_elements():
            assert lazy.decompose(z) == t.decompose(z)
        with pytest.raises(NotInGroup):
            lazy.decompose(Permutation([1, 0, 2, 3, 4]))


class TestRegularity:
    def test_sym4(self, sym4_entry):
        assert regular_on_cosets(sym4_entry.triple)

    def test_psl3(self, psl3_entry):
        assert regular_on_cosets(psl3_entry.triple)

    def test_f27(self, f27_entry):
        assert regular_on_cosets(f27_entry.triple)


class TestSerialization:
    def test_round_trip(self):
        s4, c4, s3 = s4_parts()
        t = factorization.validate(s4, c4, s3)
        t2 = ExactFactorizationTriple.from_json(t.to_json())
        assert t2.X.order == 24
        assert t2.faithful
        c = Permutation([1, 2, 3, 0])
        assert t2.decompose(c) == t.decompose(c)
