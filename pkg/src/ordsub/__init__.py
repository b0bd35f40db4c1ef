"""Ordinal submodularity on finite Boolean lattices.

Set functions with exact ordered values (integers, rationals, labels),
classification against the Q1..Q4 / Qh / quasisubmodular hierarchy,
brute-force minimization with local-to-global certificates, level-set
chains, and exhaustive small-n enumeration for verifying the structural
claims the library is built on.
"""

from .conditions import (
    ClassReport,
    ConditionId,
    ConditionWitness,
    check_condition,
    check_ordinary_submodular,
    classify,
    holds_at_pair,
    is_injective,
    is_ordinary_submodular,
    iter_witnesses,
    pairwise_q3_equivalence,
)
from .core import (
    INTEGERS,
    RATIONALS,
    GroundSet,
    IntervalSublattice,
    OrderedCodomain,
    OrdinalValue,
    SetFunction,
    default_elements,
)
from .generators import (
    ClassPredicate,
    cut_function,
    enumerate_linear_orders,
    enumerate_weak_orders,
    modular_plus_concave,
    parse_predicate,
    random_function,
    search_witness,
)
from .hierarchy import (
    ChainError,
    LevelChain,
    LevelValues,
    check_qh,
    family_chain,
    level_family,
    levels,
    qh_from_chain,
)
from .io import (
    chain_to_json,
    load_chain,
    load_set_function,
    parse_chain,
    parse_set_function,
    set_function_to_json,
)
from .minimize import (
    ArgminSet,
    ConstrainedMinimum,
    DescentTrace,
    HypothesisError,
    MinimalityCertificate,
    argmin,
    argmin_lattice_closure,
    certify_global_min,
    constrained_minimize,
    interval_descent,
    is_interval_local_min,
    is_lower_interval_min,
    lift_to_global,
)
from .verify import SUITE_NAMES, SuiteResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "ArgminSet",
    "ChainError",
    "ClassPredicate",
    "ClassReport",
    "ConditionId",
    "ConditionWitness",
    "ConstrainedMinimum",
    "DescentTrace",
    "GroundSet",
    "HypothesisError",
    "INTEGERS",
    "IntervalSublattice",
    "LevelChain",
    "LevelValues",
    "MinimalityCertificate",
    "OrderedCodomain",
    "OrdinalValue",
    "RATIONALS",
    "SUITE_NAMES",
    "SetFunction",
    "SuiteResult",
    "argmin",
    "argmin_lattice_closure",
    "certify_global_min",
    "chain_to_json",
    "check_condition",
    "check_ordinary_submodular",
    "check_qh",
    "classify",
    "constrained_minimize",
    "cut_function",
    "default_elements",
    "enumerate_linear_orders",
    "enumerate_weak_orders",
    "family_chain",
    "holds_at_pair",
    "interval_descent",
    "is_injective",
    "is_interval_local_min",
    "is_lower_interval_min",
    "is_ordinary_submodular",
    "iter_witnesses",
    "level_family",
    "levels",
    "lift_to_global",
    "load_chain",
    "load_set_function",
    "modular_plus_concave",
    "pairwise_q3_equivalence",
    "parse_chain",
    "parse_predicate",
    "parse_set_function",
    "qh_from_chain",
    "random_function",
    "run_suite",
    "search_witness",
    "set_function_to_json",
]
