"""Catalog family tests."""
import math

import pytest

from bolloops import catalog
from bolloops.errors import InvalidParameter, UnsupportedDimension
from bolloops.perm import derived_subgroup, orbit, subgroup_product_is_group


class TestSymFamily:
    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_orders(self, n):
        entry = catalog.sym_triple(n)
        t = entry.triple
        assert t.X.order == math.factorial(n)
        assert t.Y0.order == n
        assert t.Y1.order == math.factorial(n - 1)
        assert entry.loop_order == math.factorial(n)

    def test_n4_faithful(self, sym4_entry):
        assert sym4_entry.triple.faithful
        assert sym4_entry.expected["simple"] is True

    def test_n3_unfaithful(self):
        entry = catalog.sym_triple(3)
        assert not entry.triple.faithful
        assert "unfaithful" in entry.expected["notes"]

    def test_n5_notes(self):
        entry = catalog.sym_triple(5)
        assert "odd n" in entry.expected["notes"]
        assert entry.expected["simple"] is False

    def test_socle_generates_a_n(self):
        entry = catalog.sym_triple(5)
        from bolloops.perm import group_order_schreier
        assert group_order_schreier(list(entry.socle_gens)) == 60
        assert catalog.sym_triple(4).socle_gens is None

    def test_invalid(self):
        with pytest.raises(InvalidParameter):
            catalog.sym_triple(2)


class TestPslSingerFamily:
    def test_n3(self, psl3_entry):
        t = psl3_entry.triple
        assert t.X.order == 168
        assert t.Y0.order == 7
        assert t.Y1.order == 24
        assert t.faithful

    def test_n4_validates(self):
        entry = catalog.psl_singer_triple(4)
        t = entry.triple
        assert t.X.order == 20160
        assert t.Y0.order == 15
        assert t.Y1.order == 1344

    def test_socle_is_x(self, psl3_entry):
        assert psl3_entry.socle_gens == tuple(psl3_entry.triple.X.generators)

    def test_unsupported(self):
        with pytest.raises(UnsupportedDimension):
            catalog.psl_singer_triple(6)


class TestF27Family:
    def test_orders(self, f27_entry):
        t = f27_entry.triple
        assert t.X.order == 1053 == 3**4 * 13
        assert t.Y0.order == 27
        assert t.Y1.order == 39
        assert t.faithful

    def test_y1_stabilizes_zero(self, f27_entry):
        assert all(g(0) == 0 for g in f27_entry.triple.Y1.generators)

    def test_y0_regular(self, f27_entry):
        Y0 = f27_entry.triple.Y0
        assert orbit(Y0.generators, 0) == set(range(27))
        for y in Y0.elements():
            assert y.is_identity() or all(y(p) != p for p in range(27))

    def test_y0_not_translations(self, f27_entry):
        translations = {catalog._affine_perm(1, 0, b) for b in range(27)}
        assert frozenset(f27_entry.triple.Y0.elements()) != translations

    def test_second_derived_is_translations(self, f27_entry):
        X = f27_entry.triple.X
        xsecond = derived_subgroup(derived_subgroup(X))
        translations = {catalog._affine_perm(1, 0, b) for b in range(27)}
        assert frozenset(xsecond.elements()) == translations
        # X'' acts regularly, hence X'' Y1 = X
        ok, size = subgroup_product_is_group(X, xsecond,
                                             f27_entry.triple.Y1)
        assert ok and size == 1053

    def test_y0_escapes_x_prime(self, f27_entry):
        X = f27_entry.triple.X
        xprime = derived_subgroup(X)
        assert xprime.order == 351
        assert not all(g in xprime for g in f27_entry.triple.Y0.generators)
        ok, _ = subgroup_product_is_group(X, xprime, f27_entry.triple.Y0)
        assert ok

    def test_scale_factors_are_squares(self, f27_entry):
        from bolloops.algebra import f27_squares
        sq = f27_squares()
        # a 0-stabilizing map z -> a z^tau sends 1 to a, which must be a
        # nonzero square
        for g in f27_entry.triple.Y1.elements():
            assert g(1) in sq

    def test_deterministic(self):
        a = catalog.f27_triple()
        b = catalog.f27_triple()
        assert [g.images for g in a.triple.Y0.generators] == \
            [g.images for g in b.triple.Y0.generators]


class TestGetEntry:
    def test_families(self):
        assert catalog.get_entry("sym", 4).family == "sym"
        assert catalog.get_entry("f27").family == "f27"

    def test_missing_n(self):
        with pytest.raises(InvalidParameter):
            catalog.get_entry("sym")
        with pytest.raises(InvalidParameter):
            catalog.get_entry("psl-singer")

    def test_unknown(self):
        with pytest.raises(InvalidParameter):
            catalog.get_entry("nope")

    def test_default_entries(self):
        rows = catalog.default_entries()
        assert ("sym", {"n": 4}, 24) in rows
        assert ("psl-singer", {"n": 3}, 168) in rows
        assert ("f27", {}, 1053) in rows
