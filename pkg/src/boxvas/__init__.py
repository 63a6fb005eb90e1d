"""Box-reachability toolkit for vector addition systems.

Core model (exact integer arithmetic), 2-D cone geometry with exact
integer-cone membership, Steinitz-style reordering, threshold computation
with constructive witness synthesis, a dimension-doubling reduction, and a
1-VASS semilinear characterization, plus a CLI front end.
"""
from ._search import DEFAULT_NODE_BUDGET
from .boxreach import (
    OneVasThreshold,
    ThresholdCase,
    ThresholdReport,
    WindowReport,
    WitnessBundle,
    WitnessMethod,
    compute_threshold,
    decide_box_reach,
    decide_reach_capped,
    one_dim_min_peaks,
    one_vas_threshold,
    synthesize_box_witness,
    verify_window,
)
from .core import (
    PathRecord,
    VasSystem,
    Vector,
    drop_peak,
    effect,
    inf_norm,
    is_box_reaching_trace,
    is_valid_n_trace,
    overshoot,
    prefix_effects,
)
from .errors import (
    BoxVasError,
    DegenerateSystemError,
    EvidenceError,
    InstanceParseError,
    InternalCheckError,
    MalformedPathError,
    PreconditionError,
    ResourceBudgetError,
    UnsupportedDimensionError,
)
from .geometry import (
    ConeData,
    ConeKind,
    DeepConstant,
    DitcScanReport,
    IntConeResult,
    Membership,
    QuadrantRelation,
    SeedVector,
    compute_seed,
    cone_from_generators,
    default_deep_constant,
    ditc_falsification_scan,
    facet_product_bound_check,
    int_cone_member,
    is_m_deep,
    lattice_member,
)
from .instances import InstanceFile, parse_instance, serialize_instance
from .lift import (
    LiftedVas,
    box_witness_via_lift,
    decide_box_via_lift,
    lift_vas,
    lifted_target,
    project_witness,
)
from .steinitz import (
    SteinitzResult,
    check_steinitz_drop_peak,
    reorder_counts,
    steinitz_reorder,
)
from .vass1 import (
    Lps,
    SemilinearSet,
    Vass1Bounds,
    Vass1System,
    build_semilinear,
    closes,
    default_b_lps,
    lps_overshoot,
    path_profile,
    semilinear_member,
    validate_lps,
    vass1_box_decide,
    vass1_min_ceilings,
)

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "BoxVasError",
    "ConeData",
    "ConeKind",
    "DeepConstant",
    "DegenerateSystemError",
    "DitcScanReport",
    "EvidenceError",
    "InstanceFile",
    "InstanceParseError",
    "IntConeResult",
    "InternalCheckError",
    "LiftedVas",
    "Lps",
    "MalformedPathError",
    "Membership",
    "OneVasThreshold",
    "PathRecord",
    "PreconditionError",
    "QuadrantRelation",
    "ResourceBudgetError",
    "SeedVector",
    "SemilinearSet",
    "SteinitzResult",
    "ThresholdCase",
    "ThresholdReport",
    "UnsupportedDimensionError",
    "VasSystem",
    "Vass1Bounds",
    "Vass1System",
    "Vector",
    "WindowReport",
    "WitnessBundle",
    "WitnessMethod",
    "box_witness_via_lift",
    "build_semilinear",
    "check_steinitz_drop_peak",
    "closes",
    "compute_seed",
    "compute_threshold",
    "cone_from_generators",
    "decide_box_reach",
    "decide_box_via_lift",
    "decide_reach_capped",
    "default_b_lps",
    "default_deep_constant",
    "ditc_falsification_scan",
    "drop_peak",
    "effect",
    "facet_product_bound_check",
    "inf_norm",
    "int_cone_member",
    "is_box_reaching_trace",
    "is_m_deep",
    "is_valid_n_trace",
    "lattice_member",
    "lift_vas",
    "lifted_target",
    "lps_overshoot",
    "one_dim_min_peaks",
    "one_vas_threshold",
    "overshoot",
    "parse_instance",
    "path_profile",
    "prefix_effects",
    "project_witness",
    "reorder_counts",
    "semilinear_member",
    "serialize_instance",
    "steinitz_reorder",
    "synthesize_box_witness",
    "validate_lps",
    "vass1_box_decide",
    "vass1_min_ceilings",
    "verify_window",
]
