"""Nilpotent orbits of sl_n: closure order, Slodowy slices, quiver data, Specht modules."""

from .linalg import RationalMatrix
from .oracle import in_orbit_closure, jordan_nilpotent, jordan_type, sl2_triple
from .partitions import Partition, dominates, is_p_restricted, partitions_of, transpose
from .poly import MultiPoly, PolyMatrix, char_poly
from .poset import (
    DegenerationLabel, KleinianA, MinimalA, OrbitPoset, build_poset,
    minimal_degenerations, orbit_dimension,
)
from .quiver import QuiverData, QuiverPoint, check_relations, is_stable, kp_project, maffei_dims
from .reduction import OrbitPair, canonicalize, complement, same_slice_class
from .slices import chi_invariants, load_fixture, slodowy_slice
from .specht import dim_irreducible_mod_p, gram_determinant, pi_polynomial, specht_module

__all__ = [
    "RationalMatrix", "in_orbit_closure", "jordan_nilpotent", "jordan_type", "sl2_triple",
    "Partition", "dominates", "is_p_restricted", "partitions_of", "transpose",
    "MultiPoly", "PolyMatrix", "char_poly",
    "DegenerationLabel", "KleinianA", "MinimalA", "OrbitPoset", "build_poset",
    "minimal_degenerations", "orbit_dimension",
    "QuiverData", "QuiverPoint", "check_relations", "is_stable", "kp_project", "maffei_dims",
    "OrbitPair", "canonicalize", "complement", "same_slice_class",
    "chi_invariants", "load_fixture", "slodowy_slice",
    "dim_irreducible_mod_p", "gram_determinant", "pi_polynomial", "specht_module",
]
