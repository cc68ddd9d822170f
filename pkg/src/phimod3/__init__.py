"""Exact arithmetic for rank-3 filtered modules with semilinear Frobenius.

Public surface: the data model (FrobeniusData, PhiModule, filtration
shapes), weak admissibility and irreducibility checks with definitional
oracles, isomorphism decision with explicit witnesses, admissible
monodromy operators, and reduction of raw filtration data to normal form.
"""

from .admissibility import (
    AdmissibilityReport,
    check_weak_admissibility,
    is_irreducible,
    is_weakly_admissible,
    oracle_hodge_invariant,
    oracle_is_irreducible,
    oracle_weak_admissibility,
)
from .coeff import INF, Scalar, format_scalar, parse_scalar, vp
from .isomorphism import (
    Witness,
    are_isomorphic,
    find_witness,
    oracle_isomorphic,
    validate_witness,
)
from .modules import (
    F0,
    F1,
    F2,
    F3,
    PROPER_SUBMODULES,
    FrobeniusData,
    InvalidModuleError,
    PhiModule,
    SubmoduleId,
    hodge_invariant,
    newton_invariant,
    weights,
)
from .monodromy import (
    IneligiblePositionError,
    MonodromyError,
    ShapeError,
    admissible_positions,
    build_monodromy,
    entry_profile,
    enumerate_monodromies,
    validate_monodromy,
)
from .normalform import (
    DegenerateInputError,
    NormalizeResult,
    NotRepresentableError,
    RawEmbedding,
    RawFiltration,
    normalize,
)
from .tauvec import TauVector, frobenius_shift, matrix_norm, norm

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityReport",
    "DegenerateInputError",
    "F0",
    "F1",
    "F2",
    "F3",
    "FrobeniusData",
    "INF",
    "IneligiblePositionError",
    "InvalidModuleError",
    "MonodromyError",
    "NormalizeResult",
    "NotRepresentableError",
    "PROPER_SUBMODULES",
    "PhiModule",
    "RawEmbedding",
    "RawFiltration",
    "Scalar",
    "ShapeError",
    "SubmoduleId",
    "TauVector",
    "Witness",
    "admissible_positions",
    "are_isomorphic",
    "build_monodromy",
    "check_weak_admissibility",
    "entry_profile",
    "enumerate_monodromies",
    "find_witness",
    "format_scalar",
    "frobenius_shift",
    "hodge_invariant",
    "is_irreducible",
    "is_weakly_admissible",
    "matrix_norm",
    "newton_invariant",
    "norm",
    "normalize",
    "oracle_hodge_invariant",
    "oracle_is_irreducible",
    "oracle_isomorphic",
    "oracle_weak_admissibility",
    "parse_scalar",
    "validate_monodromy",
    "validate_witness",
    "vp",
    "weights",
]
