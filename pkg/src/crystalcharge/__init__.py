"""
crystalcharge: exact charge statistics on type-A crystals.

Computes the charge statistic Z - (1/2) length(wt) on semistandard
tableau crystals of SL_{n+1} via atomic decompositions, the atomic
number Z, twisted Bruhat graphs and swapping functions, and validates
the resulting Kostka-Foulkes polynomials against two independent
classical oracles.  All arithmetic is exact.
"""

from .affine_graph import (
    STAGE_INFINITY,
    AffineCoroot,
    TwistedGraph,
    apply_affine_reflection,
    arr,
    arr_infinity_formula,
    build_graph,
    build_interval,
    stabilization_stage,
    stage_reflection,
)
from .atoms import (
    Atom,
    AtomDecomposition,
    AtomStructureError,
    atomic_number,
    bplus_components,
    decompose,
    validate_atom,
)
from .charge_kostka import (
    HalfLaurentPolynomial,
    HeckeExpansion,
    RechargeTable,
    SwappingError,
    charge,
    hecke_atomic_expansion,
    kostka,
    kostka_from_hecke,
    llt_gamma,
    ls_word_charge,
    reading_word,
    recharge,
    recharge_table,
    swapping_map,
)
from .crystal import (
    Crystal,
    CrystalSizeError,
    StringStats,
    normalize_shape,
    semistandard_tableaux,
    weyl_dimension,
)
from .root_data import (
    LineOrder,
    bruhat_leq_dominant,
    dominant_representative,
    is_dominant,
    length,
    length_along,
    line_compare,
    pairing,
    positive_roots,
    rho_pairing,
    root_vector,
    weyl_apply_weight,
)
from .verify import VerifyReport, run_verify

__all__ = [
    "AffineCoroot",
    "Atom",
    "AtomDecomposition",
    "AtomStructureError",
    "Crystal",
    "CrystalSizeError",
    "HalfLaurentPolynomial",
    "HeckeExpansion",
    "LineOrder",
    "RechargeTable",
    "STAGE_INFINITY",
    "StringStats",
    "SwappingError",
    "TwistedGraph",
    "VerifyReport",
    "apply_affine_reflection",
    "arr",
    "arr_infinity_formula",
    "atomic_number",
    "bplus_components",
    "bruhat_leq_dominant",
    "build_graph",
    "build_interval",
    "charge",
    "decompose",
    "dominant_representative",
    "hecke_atomic_expansion",
    "is_dominant",
    "kostka",
    "kostka_from_hecke",
    "length",
    "length_along",
    "line_compare",
    "llt_gamma",
    "ls_word_charge",
    "normalize_shape",
    "pairing",
    "positive_roots",
    "reading_word",
    "recharge",
    "recharge_table",
    "rho_pairing",
    "root_vector",
    "run_verify",
    "semistandard_tableaux",
    "stabilization_stage",
    "stage_reflection",
    "swapping_map",
    "validate_atom",
    "weyl_apply_weight",
    "weyl_dimension",
]
