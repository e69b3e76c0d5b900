"""Fixed-point and coincidence-point laboratory on finite metric spaces."""

from .conditions import (
    ConditionKind,
    ConditionReport,
    ConditionSpec,
    KannanSupremum,
    PairMode,
    PairWitness,
    check_condition,
    classical_kannan,
    kannan_supremum,
    koparde_waghmode,
    malceski,
    s_dominated,
    sigma_kannan,
    sigma_s_kannan,
)
from .metric import (
    DEFAULT_TOL,
    FiniteMetricSpace,
    HarmonicTruncation,
    ImageOutOfSpace,
    MetricInvalid,
    MetricViolation,
    PartialAssignment,
    SelfMap,
    SpaceMismatch,
    ViolationKind,
    build_finite_space,
    build_self_map,
    build_truncated_harmonic_space,
    constant_map,
    find_violations,
    identity_map,
    random_space,
    space_from_values,
)
from .picard import (
    BruteForceSets,
    Cycle,
    DiagnosticsReport,
    NoClrBase,
    PicardTrace,
    SolveKind,
    SolveResult,
    TraceTooShort,
    brute_force_points,
    diagnose,
    find_clr_base,
    run_picard_pair,
    solve,
)
from .sigma import (
    AxiomKind,
    AxiomVerdict,
    ClassificationMatrix,
    ClassVerdict,
    ComparisonFn,
    Interval,
    MissingParam,
    Outcome,
    ParamOutOfRange,
    SubUnitCWarning,
    UnknownGallery,
    WitnessSequence,
    check_axiom,
    classify,
    gallery,
    replay_witness,
)
from .theorems import (
    Conclusion,
    Hypothesis,
    HypothesisReport,
    HypothesisStatus,
    MalformedScenario,
    ReproduceReport,
    Scenario,
    UnknownExample,
    builtin_scenario,
    check_hypotheses,
    random_condition_pair,
    reproduce,
    run_theorem,
)

__version__ = "0.1.0"
