"""Left Bol loops from exact factorizations of finite groups.

The package builds Cayley tables of left Bol loops out of exact
factorization triples (X, Y0, Y1), verifies the Bol/Moufang identities,
and checks structural properties: simplicity, nonsolvability, the G-loop
witness and multiplication group orders.
"""
from .catalog import CatalogEntry, f27_triple, get_entry, psl_singer_triple, sym_triple
from .construct import (build_loop, check_gloop_witness,
                        check_nonsolvability_condition,
                        check_simplicity_criterion, loop_product,
                        predicted_lmlt_order, verify_folder)
from .errors import (BolloopsError, CapExceeded, DegreeMismatch,
                     FolderViolation, InvalidParameter, NotExact,
                     NotFaithful, NotInGroup, NotNormal, NotNormalSocle,
                     NotSubgroup, SizeGate, UnsupportedDimension)
from .factorization import ExactFactorizationTriple, decompose, validate
from .loops import (CayleyLoop, all_normal_subloops, check_left_bol,
                    check_moufang, check_right_bol,
                    commutator_associator_subloop, is_loop, is_simple,
                    is_solvable_loop, lmlt_generators, lmlt_order,
                    loops_isomorphic, mlt_generators, mlt_order,
                    normal_closure_congruence, principal_isotope,
                    q_prime_is_q, quotient_loop)
from .perm import FiniteGroup, Permutation, compose, generate, inverse

__version__ = "0.1.0"

__all__ = [
    "BolloopsError", "CapExceeded", "CatalogEntry", "CayleyLoop",
    "DegreeMismatch", "ExactFactorizationTriple", "FiniteGroup",
    "FolderViolation", "InvalidParameter", "NotExact", "NotFaithful",
    "NotInGroup", "NotNormal", "NotNormalSocle", "NotSubgroup",
    "Permutation", "SizeGate", "UnsupportedDimension",
    "all_normal_subloops", "build_loop", "check_gloop_witness",
    "check_left_bol", "check_moufang", "check_nonsolvability_condition",
    "check_right_bol", "check_simplicity_criterion",
    "commutator_associator_subloop", "compose", "decompose", "f27_triple",
    "generate", "get_entry", "inverse", "is_loop", "is_simple",
    "is_solvable_loop", "lmlt_generators", "lmlt_order", "loop_product",
    "loops_isomorphic", "mlt_generators", "mlt_order",
    "normal_closure_congruence", "predicted_lmlt_order",
    "principal_isotope", "psl_singer_triple", "q_prime_is_q",
    "quotient_loop", "sym_triple", "validate", "verify_folder",
]
