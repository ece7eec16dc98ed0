"""Cayley loop machinery tests."""
import numpy as np
import pytest

from bolloops import construct, loops
from bolloops.errors import NotNormal, SizeGate
from bolloops.loops import (CayleyLoop, NormalSubloop, all_normal_subloops,
                            check_left_bol, check_moufang, check_right_bol,
                            commutator_associator_subloop, is_associative,
                            is_loop, is_simple, is_solvable_loop,
                            left_translation, lmlt_generators, lmlt_order,
                            loops_isomorphic, mlt_order,
                            normal_closure_congruence, principal_isotope,
                            q_prime_is_q, quotient_loop, right_translation)
from bolloops.perm import Permutation


def cyclic(n):
    return np.add.outer(np.arange(n), np.arange(n)) % n


def klein_table():
    return np.array([[0, 1, 2, 3], [1, 0, 3, 2],
                     [2, 3, 0, 1], [3, 2, 1, 0]])


class TestIsLoop:
    def test_group_tables(self, z4, z6, s3_loop, s4_loop, q4):
        for L in (z4, z6, s3_loop, s4_loop, q4):
            assert is_loop(L.table)

    def test_duplicated_entry(self):
        t = cyclic(4).copy()
        t[1, 1] = t[1, 2]
        assert not is_loop(t)

    def test_identity_not_first(self):
        t = (cyclic(4) + 1) % 4
        assert not is_loop(t)

    def test_non_square(self):
        assert not is_loop(np.zeros((2, 3), dtype=int))


class TestTranslations:
    def test_identity_row(self, q4):
        assert left_translation(q4, 0).is_identity()
        assert right_translation(q4, 0).is_identity()

    def test_group_homomorphism(self, s3_loop):
        t = s3_loop.table
        for a in range(6):
            for b in range(6):
                la, lb = left_translation(s3_loop, a), \
                    left_translation(s3_loop, b)
                assert la * lb == left_translation(s3_loop, int(t[a, b]))

    def test_q4_matches_loop_product(self, sym4_entry, q4):
        # oracle: the closed-form product applied pointwise to permutations
        ix = construct.IndexedTriple(sym4_entry.triple)
        for a in (1, 5, 17):
            la = left_translation(q4, a)
            for y in range(24):
                z = construct.loop_product(sym4_entry.triple,
                                           ix.elems[a], ix.elems[y])
                assert ix.index[z.images] == la(y)


class TestBolChecks:
    def test_groups_are_bol(self, z6, s3_loop, s4_loop):
        for L in (z6, s3_loop, s4_loop):
            assert check_left_bol(L).holds
            assert check_right_bol(L).holds
            assert check_moufang(L).holds

    def test_z5(self):
        L = CayleyLoop(cyclic(5))
        assert check_right_bol(L).holds

    def test_q4(self, q4):
        left = check_left_bol(q4)
        assert left.holds and left.mode == "exhaustive"
        right = check_right_bol(q4)
        assert not right.holds
        x, y, z = right.witness
        t = q4.table
        assert t[t[t[x, y], z], y] != t[x, t[t[y, z], y]]
        mo = check_moufang(q4)
        assert not mo.holds and mo.witness == right.witness

    def test_witness_is_least(self, q4):
        x, y, z = check_right_bol(q4).witness
        t = q4.table
        for xx in range(x + 1):
            for yy in range(24):
                for zz in range(24):
                    if (xx, yy, zz) >= (x, y, z):
                        return
                    assert t[t[t[xx, yy], zz], yy] == \
                        t[xx, t[t[yy, zz], yy]]

    def test_moufang_equivalence(self, z6, s3_loop, q4, q168):
        for L in (z6, s3_loop, q4, q168):
            assert check_moufang(L).holds == (
                check_left_bol(L).holds and check_right_bol(L).holds)

    def test_sampled_mode(self, q4):
        res = check_left_bol(q4, mode="sampled", samples=5000, seed=11)
        assert res.holds and res.mode == "sampled"
        assert res.samples == 5000 and res.seed == 11

    def test_auto_respects_limit(self, q4):
        res = check_left_bol(q4, exhaustive_limit=100)
        assert res.mode == "sampled"
        res = check_left_bol(q4, exhaustive_limit=100, force_exhaustive=True)
        assert res.mode == "exhaustive"


class TestMultiplicationGroups:
    def test_group_table_lmlt(self, z6, s3_loop, s4_loop):
        for L in (z6, s3_loop, s4_loop):
            assert lmlt_order(L) == L.order
        # Mlt(G) has order |G|^2 / |Z(G)|; equals |G| only when abelian
        assert mlt_order(z6) == 6
        assert mlt_order(s3_loop) == 36
        assert mlt_order(s4_loop) == 576

    def test_q4_lmlt(self, q4):
        assert lmlt_order(q4) == 288

    def test_transitive(self, q4):
        from bolloops.perm import is_transitive
        assert is_transitive(lmlt_generators(q4), 24)


class TestNormalSubloops:
    def test_trivial_closure(self, z4):
        sub = normal_closure_congruence(z4, 0)
        assert sub.elements == (0,)

    def test_z4(self, z4):
        sub = normal_closure_congruence(z4, 2)
        assert sub.elements == (0, 2)
        assert sub.classes() == [(0, 2), (1, 3)]

    def test_q4_collapses(self, q4):
        for a in (1, 11, 23):
            assert normal_closure_congruence(q4, a).order == 24

    def test_all_normal_subloops(self, z4, z6, s3_loop, s4_loop, q4):
        assert [s.order for s in all_normal_subloops(z4)] == [1, 2, 4]
        assert [s.order for s in all_normal_subloops(z6)] == [1, 2, 3, 6]
        assert [s.order for s in all_normal_subloops(s3_loop)] == [1, 3, 6]
        assert [s.order for s in all_normal_subloops(s4_loop)] == \
            [1, 4, 12, 24]
        assert [s.order for s in all_normal_subloops(q4)] == [1, 24]

    def test_size_gate(self, q4):
        with pytest.raises(SizeGate):
            all_normal_subloops(q4, gate=10)

    def test_is_simple(self, z6, s3_loop, q4):
        assert not is_simple(z6)
        assert not is_simple(s3_loop)
        assert is_simple(q4)

    def test_simple_iff_two_subloops(self, z4, z6, s3_loop, q4):
        for L in (z4, z6, s3_loop, q4):
            assert is_simple(L) == (len(all_normal_subloops(L)) == 2)


class TestCommutatorAssociator:
    def test_abelian(self, z6):
        assert commutator_associator_subloop(z6).order == 1

    def test_s3(self, s3_loop):
        sub = commutator_associator_subloop(s3_loop)
        assert sub.order == 3

    def test_q4(self, q4):
        assert commutator_associator_subloop(q4).order == 24

    def test_matches_q_prime_is_q(self, z4, z6, s3_loop, s4_loop, q4):
        for L in (z4, z6, s3_loop, s4_loop, q4):
            assert q_prime_is_q(L) == \
                (commutator_associator_subloop(L).order == L.order)

    def test_q_prime_abelian(self, z6):
        assert not q_prime_is_q(z6)


class TestQuotient:
    def test_by_whole(self, q4):
        sub = normal_closure_congruence(q4, 1)
        assert quotient_loop(q4, sub).order == 1

    def test_z6_mod_z2(self, z6):
        sub = normal_closure_congruence(z6, 3)
        q = quotient_loop(z6, sub)
        assert q.order == 3
        assert np.array_equal(q.table, cyclic(3))

    def test_by_trivial(self, s3_loop):
        sub = normal_closure_congruence(s3_loop, 0)
        q = quotient_loop(s3_loop, sub)
        assert np.array_equal(q.table, s3_loop.table)

    def test_not_normal(self, s3_loop):
        bogus = NormalSubloop(elements=(0, 1),
                              labels=np.array([0, 0, 2, 2, 4, 4]))
        with pytest.raises(NotNormal):
            quotient_loop(s3_loop, bogus)


class TestSolvability:
    def test_groups(self, z4, z6, s3_loop, s4_loop):
        for L in (z4, z6, s3_loop, s4_loop):
            assert is_solvable_loop(L)

    def test_q4(self, q4):
        assert not is_solvable_loop(q4)


class TestIsotopes:
    def test_identity_isotope(self, q4):
        iso = principal_isotope(q4, 0, 0)
        assert np.array_equal(iso.table, q4.table)

    def test_isotopes_are_loops(self, q4):
        rng = np.random.default_rng(5)
        for _ in range(10):
            a, b = rng.integers(0, 24, size=2)
            assert is_loop(principal_isotope(q4, int(a), int(b)).table)

    def test_group_isotopes_isomorphic(self, s3_loop):
        for a in range(6):
            ok, mapping = loops_isomorphic(
                s3_loop, principal_isotope(s3_loop, a, (a + 1) % 6))
            assert ok and mapping is not None


class TestIsomorphism:
    def test_self(self, q4):
        ok, mapping = loops_isomorphic(q4, q4)
        assert ok
        t = q4.table
        m = np.array(mapping)
        # direct check of the homomorphism property
        for a in range(24):
            for b in range(24):
                assert m[t[a, b]] == t[m[a], m[b]]

    def test_z4_vs_klein(self):
        ok, mapping = loops_isomorphic(CayleyLoop(cyclic(4)),
                                       CayleyLoop(klein_table()))
        assert not ok and mapping is None

    def test_different_orders(self, z4, z6):
        assert loops_isomorphic(z4, z6) == (False, None)

    def test_size_gate(self, q168):
        with pytest.raises(SizeGate):
            loops_isomorphic(q168, q168)


class TestSerialization:
    def test_json_round_trip(self, q4):
        data = q4.to_json()
        back = CayleyLoop.from_json(data)
        assert np.array_equal(back.table, q4.table)
        assert back.labels == q4.labels
        assert back.meta == q4.meta

    def test_csv_round_trip(self, q4):
        text = q4.to_csv()
        lines = text.strip().splitlines()
        assert len(lines) == 24
        assert lines[0].startswith("1,")
        back = CayleyLoop.from_csv(text)
        assert np.array_equal(back.table, q4.table)

    def test_is_associative(self, s4_loop, q4):
        assert is_associative(s4_loop.table)
        assert not is_associative(q4.table)
