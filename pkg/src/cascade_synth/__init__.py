"""Cascade synthesis for linear quantum stochastic systems.

Tests whether a system (S, K, R) of n harmonic oscillators is realizable as
a pure cascade of one-mode stages, constructs the cascade when it is, and,
for passive systems, builds the symplectic change of variables that always
yields a transfer-function-equivalent cascade realization.  A verification
layer certifies every result numerically, and a JSON document format plus
CLI make the pipeline scriptable.
"""

from .composition import (
    CascadeChain,
    cascade,
    concatenation,
    one_mode_stages,
    residual_interaction,
    series,
)
from .documents import (
    RealizationDocument,
    SystemDocument,
    canonical_json,
    document_digest,
)
from .errors import (
    BadResidual,
    CascadeSynthError,
    ConvergenceFailure,
    FieldCountMismatch,
    NonHermitianRtilde,
    NonSymmetricR,
    NonUnitaryInput,
    NonUnitaryScattering,
    NotCascadeRealizable,
    NotPassive,
    OddDimension,
    ParseError,
    ResolventSingular,
    ScatteringMismatch,
)
from .model import (
    DEFAULT_TOL,
    ComplexMatrix,
    DoubledStateSpace,
    PassiveForm,
    RealMatrix,
    SlhSystem,
    StructuralConstants,
    annihilation_map,
    build_state_space,
    drift_matrix,
    from_passive_form,
    identity_system,
    is_passive,
    max_abs,
    symplectic_form,
    to_passive_form,
)
from .passive import (
    PassiveRealization,
    SchurLower,
    SymplecticTransform,
    build_symplectic,
    mode_matrix,
    passive_realize,
    schur_lower,
)
from .realizability import (
    TriangularityReport,
    decompose_cascade,
    is_cascade_realizable,
)
from .verification import (
    EquivalenceReport,
    TransferSample,
    ccr_preservation,
    certify_equivalence,
    certify_symplectic,
    transfer_function,
)

__version__ = "0.1.0"

__all__ = [
    "BadResidual",
    "CascadeChain",
    "CascadeSynthError",
    "ComplexMatrix",
    "ConvergenceFailure",
    "DEFAULT_TOL",
    "DoubledStateSpace",
    "EquivalenceReport",
    "FieldCountMismatch",
    "NonHermitianRtilde",
    "NonSymmetricR",
    "NonUnitaryInput",
    "NonUnitaryScattering",
    "NotCascadeRealizable",
    "NotPassive",
    "OddDimension",
    "ParseError",
    "PassiveForm",
    "PassiveRealization",
    "RealMatrix",
    "RealizationDocument",
    "ResolventSingular",
    "ScatteringMismatch",
    "SchurLower",
    "SlhSystem",
    "StructuralConstants",
    "SymplecticTransform",
    "SystemDocument",
    "TransferSample",
    "TriangularityReport",
    "annihilation_map",
    "build_state_space",
    "build_symplectic",
    "canonical_json",
    "cascade",
    "ccr_preservation",
    "certify_equivalence",
    "certify_symplectic",
    "concatenation",
    "decompose_cascade",
    "document_digest",
    "drift_matrix",
    "from_passive_form",
    "identity_system",
    "is_cascade_realizable",
    "is_passive",
    "max_abs",
    "mode_matrix",
    "one_mode_stages",
    "passive_realize",
    "residual_interaction",
    "schur_lower",
    "series",
    "symplectic_form",
    "to_passive_form",
    "transfer_function",
]
