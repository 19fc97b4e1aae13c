"""Verify and repair the well-gradedness of union-closed set families."""

from .core import (
    GroundSet,
    SetFamily,
    SizeParams,
    StateSet,
    SurmiseFunction,
    TightPath,
    atoms,
    distance,
    is_discriminative,
    is_union_closed,
    span,
    surmise,
)
from .errors import (
    CapacityError,
    DomainError,
    FamilyError,
    ParseError,
    UsageError,
    ValidationError,
)
from .extension import (
    ExtensionResult,
    ExtensionState,
    PathFamily,
    minimal_wg_extension,
    path_extension,
    verify_extension,
)
from .oracle import (
    enumerate_families,
    oracle_empty_set_criterion,
    oracle_is_base,
    oracle_is_well_graded,
    oracle_tight_path,
    oracle_wg_via_base_paths,
)
from .satreduce import (
    Sat3Instance,
    TruthAssignment,
    decide_subset_of_base,
    parse_dimacs,
    reduce_3sat,
    witness_from_assignment,
)
from .verify import (
    EndpointReport,
    VerificationReport,
    Witness,
    endpoint_report,
    endpoints,
    is_base,
    is_learning_space_base,
    is_wg_base,
    quotient,
    surmise_is_partition,
)

__version__ = "0.1.0"

__all__ = [
    "GroundSet",
    "StateSet",
    "SetFamily",
    "SizeParams",
    "SurmiseFunction",
    "TightPath",
    "PathFamily",
    "ExtensionResult",
    "ExtensionState",
    "distance",
    "span",
    "is_union_closed",
    "atoms",
    "surmise",
    "is_discriminative",
    "endpoints",
    "endpoint_report",
    "is_base",
    "is_learning_space_base",
    "surmise_is_partition",
    "quotient",
    "is_wg_base",
    "path_extension",
    "minimal_wg_extension",
    "verify_extension",
    "oracle_is_well_graded",
    "oracle_tight_path",
    "oracle_wg_via_base_paths",
    "oracle_empty_set_criterion",
    "oracle_is_base",
    "enumerate_families",
    "Sat3Instance",
    "TruthAssignment",
    "reduce_3sat",
    "witness_from_assignment",
    "decide_subset_of_base",
    "parse_dimacs",
    "VerificationReport",
    "EndpointReport",
    "Witness",
    "FamilyError",
    "UsageError",
    "DomainError",
    "CapacityError",
    "ValidationError",
    "ParseError",
]
