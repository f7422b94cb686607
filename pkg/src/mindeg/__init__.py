"""Minimal degrees of algebraic numbers in triquadratic and quartic fields.

Exact rational arithmetic throughout: field elements, witness polynomials,
and elliptic curve points are all Fraction-backed, so every certificate the
package emits can be re-checked by exact re-evaluation.
"""

from .elliptic import (
    EllCurve,
    EllPoint,
    SearchOutcome,
    TorsionClass,
    congruent_curve,
    congruent_evidence,
    make_curve,
    point_search,
    quadratic_twist,
    theorem55_point,
    three_torsion_points,
    torsion_class,
    z2z6_family,
)
from .multiquad import (
    ALL_CHARACTERS,
    GaloisCharacter,
    TriquadElement,
    TriquadField,
    WitnessCertificate,
    conjugate,
    deg_alpha,
    degree_over_Q,
    evaluate_poly,
    index4_witness,
    index4_witness_general,
    is_primitive,
    parse_element,
    pretty_print,
    subfield_index,
)
from .numtheory import (
    DomainError,
    SquarefreeDecomposition,
    is_square,
    is_squarefree,
    squarefree_decompose,
)
from .quartic import (
    QuarticField,
    QuarticWitness,
    element_degree,
    make_quartic_field,
    make_v4_field,
    quartic_witness,
    relative_minpoly,
)
from .survey import (
    ScanRow,
    TwistScanConfig,
    TwistScanReport,
    conjecture_scan,
    family55_scan,
    selmer_constant,
    selmer_constant_exact,
    twist_scan,
)
from .witness import (
    Index2Target,
    MinDeg2Outcome,
    UnsupportedTargetError,
    certificate_to_json,
    mindeg2_decide,
    normalize_index2_target,
    point_to_witness,
    verify_certificate_json,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_CHARACTERS",
    "DomainError",
    "EllCurve",
    "EllPoint",
    "GaloisCharacter",
    "Index2Target",
    "MinDeg2Outcome",
    "QuarticField",
    "QuarticWitness",
    "ScanRow",
    "SearchOutcome",
    "SquarefreeDecomposition",
    "TorsionClass",
    "TriquadElement",
    "TriquadField",
    "TwistScanConfig",
    "TwistScanReport",
    "UnsupportedTargetError",
    "WitnessCertificate",
    "certificate_to_json",
    "congruent_curve",
    "congruent_evidence",
    "conjecture_scan",
    "conjugate",
    "deg_alpha",
    "degree_over_Q",
    "element_degree",
    "evaluate_poly",
    "family55_scan",
    "index4_witness",
    "index4_witness_general",
    "is_primitive",
    "is_square",
    "is_squarefree",
    "make_curve",
    "make_quartic_field",
    "make_v4_field",
    "mindeg2_decide",
    "normalize_index2_target",
    "parse_element",
    "point_search",
    "point_to_witness",
    "pretty_print",
    "quadratic_twist",
    "quartic_witness",
    "relative_minpoly",
    "selmer_constant",
    "selmer_constant_exact",
    "squarefree_decompose",
    "subfield_index",
    "theorem55_point",
    "three_torsion_points",
    "torsion_class",
    "twist_scan",
    "verify_certificate_json",
    "z2z6_family",
]
