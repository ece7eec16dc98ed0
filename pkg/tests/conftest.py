"""Shared fixtures: catalog entries and built loops, session scoped."""
import numpy as np
import pytest

from bolloops import catalog, construct, loops
from bolloops.loops import CayleyLoop
from bolloops.perm import FiniteGroup, Permutation


@pytest.fixture(scope="session")
def sym4_entry():
    return catalog.sym_triple(4)


@pytest.fixture(scope="session")
def q4(sym4_entry):
    return construct.build_loop(sym4_entry.triple)


@pytest.fixture(scope="session")
def psl3_entry():
    return catalog.psl_singer_triple(3)


@pytest.fixture(scope="session")
def q168(psl3_entry):
    return construct.build_loop(psl3_entry.triple)


@pytest.fixture(scope="session")
def sym6_entry():
    return catalog.sym_triple(6)


@pytest.fixture(scope="session")
def f27_entry():
    return catalog.f27_triple()


@pytest.fixture(scope="session")
def q1053(f27_entry):
    return construct.build_loop(f27_entry.triple)


def cyclic_table(n):
    return np.add.outer(np.arange(n), np.arange(n)) % n


@pytest.fixture(scope="session")
def z4():
    return CayleyLoop(cyclic_table(4))


@pytest.fixture(scope="session")
def z6():
    return CayleyLoop(cyclic_table(6))


def s_n_group(n):
    gens = [Permutation.from_cycles("(0 1)", n),
            Permutation([(i + 1) % n for i in range(n)])]
    return FiniteGroup(gens)


@pytest.fixture(scope="session")
def s3_loop():
    return CayleyLoop.from_group(s_n_group(3))


@pytest.fixture(scope="session")
def s4_loop():
    return CayleyLoop.from_group(s_n_group(4))


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Trigger numba compilation once so timed tests measure the scans,
    not the jit."""
    t = cyclic_table(3)
    from bolloops import kernels
    kernels.left_bol_exhaustive(t)
    kernels.right_bol_exhaustive(t)
    kernels.congruence_close(t, [(0, 1)])
