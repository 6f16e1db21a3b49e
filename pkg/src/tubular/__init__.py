"""Decision procedures for tubular groups (graphs of groups with Z^2 vertex
groups and Z edge groups): CAT(0)ness, free-by-cyclic-ness, virtual
specialness, cocompact cubulation, equitable sets and wall dilation, and the
virtual-retract obstruction — all in exact arithmetic, with machine-checkable
certificates."""

from .cat0 import Cat0Verdict, check_certificate, decide_cat0
from .core import (
    Edge,
    GpqParams,
    IntVec2,
    QForm2,
    TubularPresentation,
    change_basis,
    single_vertex_presentation,
)
from .cubulate import (
    EquitableSet,
    NotFound,
    WallGraph,
    canonical_th3_set,
    dilation_decide,
    equitable_search,
    verify_equitable,
    wall_graph,
)
from .dsl import DslError, parse, unparse
from .fbc import (
    FbcVerdict,
    Functional,
    amalgam_fbc_sufficient,
    amalgamate,
    button_decide,
    decide_fbc_single_vertex,
    generalized_retractor,
    hom_space,
)
from .special import (
    Answer,
    SpecialVerdict,
    cocompact_cubulation_decide,
    gpq_compact_special_decide,
    gpq_to_tubular,
    gpq_vspecial_decide,
    vspecial_fbc_decide,
    vspecial_sufficient,
)
from .vrc import VrcVerdict, th9_rule, vrc_obstruction

__all__ = [
    "Answer",
    "Cat0Verdict",
    "DslError",
    "Edge",
    "EquitableSet",
    "FbcVerdict",
    "Functional",
    "GpqParams",
    "IntVec2",
    "NotFound",
    "QForm2",
    "SpecialVerdict",
    "TubularPresentation",
    "VrcVerdict",
    "WallGraph",
    "amalgam_fbc_sufficient",
    "amalgamate",
    "button_decide",
    "canonical_th3_set",
    "change_basis",
    "check_certificate",
    "cocompact_cubulation_decide",
    "decide_cat0",
    "decide_fbc_single_vertex",
    "dilation_decide",
    "equitable_search",
    "generalized_retractor",
    "gpq_compact_special_decide",
    "gpq_to_tubular",
    "gpq_vspecial_decide",
    "hom_space",
    "parse",
    "single_vertex_presentation",
    "th9_rule",
    "unparse",
    "verify_equitable",
    "vrc_obstruction",
    "vspecial_fbc_decide",
    "vspecial_sufficient",
    "wall_graph",
]

__version__ = "0.1.0"
