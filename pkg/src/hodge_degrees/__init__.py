"""Exact degrees of Hurwitz-Hodge classes on spaces of cyclic admissible covers."""

from .boundary import BoundaryCurve, enumerate_boundary_curves, stirling2
from .degrees import (
    AgeCase,
    ConsistencyError,
    Lambda1eCase,
    UnsupportedCaseError,
    classify_lambda1e,
    lambda1_degree,
    lambda1_degree_compact,
    lambda1_degree_prime,
    lambda1e_degree,
    psi_integral,
)
from .localization import (
    DegenerateRelationError,
    LocalizationRelation,
    nonorbifold_relation,
    orbifold_relation,
    solve,
)
from .monodromy import (
    CoverInvariants,
    InvalidDatumError,
    MonodromyDatum,
    age,
    cover_invariants,
    enumerate_data,
    induced_datum,
    new_datum,
    rank_eigenbundle,
)
from .numeric import Rational, frac_part, gcd_with, multinomial
from .tautring import (
    KAPPA1,
    DivisorClass,
    DivisorSymbol,
    boundary,
    canonicalize,
    evaluate_degree_4pt,
    graph_formula_lambda1,
    graph_formula_lambda1e_question,
    pair,
    psi,
)

__version__ = "0.1.0"
