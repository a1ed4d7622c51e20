"""Decision support for adopting (or not adopting) an Agile method.

The package scores a project against a taxonomy of Agile risk factors:
per-factor weights and a team attitude value are combined into an overall
specific risk (OSR), an attitude correction (MAF) and a final decisional
value (DEC), with DEC above the threshold classifying Agile adoption as
overly risky. Ships a CLI (``wainge``), an HTTP service and a persistent
session format for facilitated assessments.
"""

__version__ = "1.0.0"

from .elicitation import (
    ATTITUDE_QUESTION,
    AttitudeResponse,
    Problem,
    Provenance,
    QuestionResponse,
    WeightEntry,
    WeightVector,
    aggregate_ava,
    aggregate_factor_weight,
    evaluate_session,
    render_question,
    resolve_weights,
    to_score_input,
)
from .engine import (
    DEFAULT_CONFIG,
    DecisionResult,
    ModelConfig,
    Recommendation,
    ScoreEntry,
    ScoreInput,
    SensitivityReport,
    TornadoEntry,
    classify,
    compute_dec,
    compute_maf,
    compute_osr,
    evaluate,
    gradient,
    sensitivity,
    threshold_ava,
    tornado,
    whatif,
)
from .errors import (
    AggregationError,
    ConflictError,
    DomainError,
    ElicitationError,
    IntegrityError,
    MigrationError,
    RangeError,
    TaxonomyValidationError,
    UnknownFactorError,
    WaingeError,
)
from .store import (
    AssessmentSession,
    SessionStore,
    TeamMember,
    WeightOverride,
    apply_commit,
    load_session,
    new_session,
    save_session,
)
from .taxonomy import (
    Category,
    RiskFactor,
    Taxonomy,
    builtin_taxonomy,
    validate_taxonomy,
)

__all__ = [
    "__version__",
    "ATTITUDE_QUESTION",
    "AggregationError",
    "AssessmentSession",
    "AttitudeResponse",
    "Category",
    "ConflictError",
    "DEFAULT_CONFIG",
    "DecisionResult",
    "DomainError",
    "ElicitationError",
    "IntegrityError",
    "MigrationError",
    "ModelConfig",
    "Problem",
    "Provenance",
    "QuestionResponse",
    "RangeError",
    "Recommendation",
    "RiskFactor",
    "ScoreEntry",
    "ScoreInput",
    "SensitivityReport",
    "SessionStore",
    "Taxonomy",
    "TaxonomyValidationError",
    "TeamMember",
    "TornadoEntry",
    "UnknownFactorError",
    "WaingeError",
    "WeightEntry",
    "WeightOverride",
    "WeightVector",
    "aggregate_ava",
    "aggregate_factor_weight",
    "apply_commit",
    "builtin_taxonomy",
    "classify",
    "compute_dec",
    "compute_maf",
    "compute_osr",
    "evaluate",
    "evaluate_session",
    "gradient",
    "load_session",
    "new_session",
    "render_question",
    "resolve_weights",
    "save_session",
    "sensitivity",
    "threshold_ava",
    "to_score_input",
    "tornado",
    "validate_taxonomy",
    "whatif",
]
