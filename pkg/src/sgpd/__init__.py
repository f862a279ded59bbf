"""Finite semigroupoids, their partial actions on finite sets, and the
universal globalization of such actions."""

from .action import (
    DegeneracySplit,
    GlobalityReport,
    PartialAction,
    action_violations,
    degeneracy_split,
    is_global,
    left_regular,
    restrict,
    validate_partial_action,
)
from .errors import (
    ActionError,
    BudgetExceeded,
    ConsistencyError,
    InfiniteSemigroupoidError,
    MorphismError,
    ParseError,
    SemigroupoidError,
    SgpdError,
    ValidationError,
    Violation,
)
from .globalization import (
    DELTA,
    DPair,
    Globalization,
    build_D,
    build_globalization,
    compute_approx,
    compute_R,
    degeneracy_correspondence,
    induced_morphism,
    rho_domain,
    verify_universality,
)
from .morphism import ActionMorphism, Status, check_iso_to_restriction, check_morphism, compose, enumerate_morphisms
from .partition import Partition
from .semigroupoid import (
    GraphStructure,
    Semigroupoid,
    composable_sets,
    from_category,
    from_graph,
    from_semigroup,
    identities,
    is_categorical,
    markov_from_matrix,
    validate_semigroupoid,
)

__version__ = "0.1.0"

__all__ = [
    "DegeneracySplit",
    "GlobalityReport",
    "PartialAction",
    "action_violations",
    "degeneracy_split",
    "is_global",
    "left_regular",
    "restrict",
    "validate_partial_action",
    "ActionError",
    "BudgetExceeded",
    "ConsistencyError",
    "InfiniteSemigroupoidError",
    "MorphismError",
    "ParseError",
    "SemigroupoidError",
    "SgpdError",
    "ValidationError",
    "Violation",
    "DELTA",
    "DPair",
    "Globalization",
    "build_D",
    "build_globalization",
    "compute_approx",
    "compute_R",
    "degeneracy_correspondence",
    "induced_morphism",
    "rho_domain",
    "verify_universality",
    "GraphStructure",
    "Semigroupoid",
    "composable_sets",
    "from_category",
    "from_graph",
    "from_semigroup",
    "identities",
    "is_categorical",
    "markov_from_matrix",
    "validate_semigroupoid",
    "ActionMorphism",
    "Status",
    "check_iso_to_restriction",
    "check_morphism",
    "compose",
    "enumerate_morphisms",
    "Partition",
]
