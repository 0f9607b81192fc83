"""Executable well-ordering of finite sets from an explicit choice function."""

__version__ = "0.1.0"

from .choice import ChoiceFunction, alpha, choose, conjugate, random_table, validate_table
from .compare import ComparabilityVerdict, Relation, agreement_core, compare_regular
from .errors import *  # noqa: F401,F403
from .oracle import (
    OracleRun,
    enumerate_regular_families,
    maximality_check,
    run_oracle,
    union_of_all_regular,
)
from .regular import Chain, RegularityReport, build_chain, least_of_chain, successor, verify_regular
from .sets import (
    GroundSet,
    Subset,
    SubsetFamily,
    complement,
    family_intersection,
    family_union,
    is_strict_subset,
    strict_lower_union,
)
from .wellorder import (
    WellOrder,
    check_injective,
    check_surjective,
    compare_atoms,
    induced_order,
    stage_of,
    verify_wellorder,
)
