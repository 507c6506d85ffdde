"""Quantum decision engine.

Prospects over an action-mode grid are represented as complex amplitude
vectors in a tensor-product mind space; their probabilities split into a
classical diagonal part and a quantum interference term, and a dense
operator oracle recomputes everything independently for cross-checking.
"""

from .algebra import (
    EMPTY_ACTION,
    EMPTY_PROSPECT,
    ActionFactor,
    ActionMode,
    ElementaryProspect,
    EmptyAction,
    ProspectAttributes,
    ProspectSpec,
    enumerate_elementary,
    is_composite,
    prospect_support,
    ring_product,
)
from .errors import (
    DimensionError,
    InvalidScenario,
    NormalizationError,
    NumericalError,
    ParseError,
    QdtError,
    StateError,
    SupportViolation,
    UsageError,
    ZeroNormError,
)
from .hilbert import (
    MindSpace,
    basis_index,
    basis_unindex,
    build_amplitude_matrix,
    build_product_state,
    build_prospect_state,
    inner,
    normalize,
    vacuum_state,
)
from .lattice import (
    AttractionReport,
    OrderingRelation,
    ProspectLattice,
    attraction_compare,
    check_attraction_consistency,
    compare,
    optimal_prospect,
    preference_criterion,
    rank_order,
)
from .measure import (
    IDENTITY_TOL,
    NormalizationPolicy,
    ProbabilisticState,
    ProspectResult,
    conjunction_probability,
    decompose,
    evaluate_all,
    interference_term,
    prospect_probability,
)
from .oracle import (
    DenseEvaluation,
    dense_conjunction_operator,
    dense_evaluate,
    dense_expectation,
    dense_interference,
    dense_prospect_operator,
    resolution_of_identity_check,
)
from .scenario_io import (
    BUILTIN_NAMES,
    DecisionReport,
    Scenario,
    ScenarioOptions,
    build_report,
    builtin_scenario,
    evaluate_scenario,
    parse_scenario,
    random_strict_scenario,
    report_csv,
    report_json,
    report_table,
    scenario_schema,
    serialize_scenario,
)

__version__ = "0.1.0"
