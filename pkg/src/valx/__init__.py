"""Exact computations with valuation-transcendental extensions of valued fields."""

from .errors import InvariantBreach, ParseError, PreconditionError, ValxError
from .extension import (
    OmegaKind,
    PairOfDefinition,
    classify,
    classify_purity,
    coincidence_test,
    delta,
    is_key_polynomial,
    is_minimal_pair_by_value_order,
    nu_a_gamma,
    nu_Q,
    omega,
    omega_Q,
    pairs_equivalent,
    simultaneous_extension_bound,
    structure_report,
)
from .field_tower import FieldElement, Tower, artin_schreier_root_value, ostrowski_defect
from .fields import PAdicRationals, RationalFunctionField
from .newton import conjugate_differences, kras, newton_polygon
from .pcs import (
    PcsPrefix,
    is_limit_at_prefix,
    limit_root_witness,
    pair_limit_check,
    poly_track,
    verify_prefix,
)
from .polynomial import Poly, gcd, is_separable, q_expand, taylor_expand
from .session import parse, run, run_text
from .structure import (
    DistinguishedChain,
    ic_classify,
    j_count,
    minimal_field_invariants_check,
    minimal_pair_from_chain,
    tame_degree,
    verify_chain,
)
from .valgroup import (
    INF,
    AboveAll,
    GroupValue,
    QuadIrr,
    RationalPoint,
    SubgroupDesc,
    cmp,
    torsion_order,
    value,
)

__version__ = "0.1.0"
