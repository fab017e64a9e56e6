"""
Schemas

Pydantic models for universes, transformations, parameters, errors and
structured results.
"""

from .universe import Universe, CaseTag, ElementFilter
from .transformation import Transformation, ImageSet, KernelPartition
from .params import Params, OutputFormat
from .result import (
    ErrorCode,
    ValidationError,
    ValidationResult,
    SemigroupError,
    NotMemberError,
    NotRegularError,
    MaterializationError,
)
from .utils import make_universe, make_map, make_maps
from .report import (
    RegularityWitness,
    RelationKind,
    ClassMethod,
    RelationClasses,
    AbundanceVerdict,
    CountResult,
    RelationResult,
    VerificationCell,
    VerificationReport,
)

__all__ = [
    # Universe
    "Universe",
    "CaseTag",
    "ElementFilter",
    # Transformations
    "Transformation",
    "ImageSet",
    "KernelPartition",
    # Params
    "Params",
    "OutputFormat",
    # Errors
    "ErrorCode",
    "ValidationError",
    "ValidationResult",
    "SemigroupError",
    "NotMemberError",
    "NotRegularError",
    "MaterializationError",
    # Reports
    "RegularityWitness",
    "RelationKind",
    "ClassMethod",
    "RelationClasses",
    "AbundanceVerdict",
    "CountResult",
    "RelationResult",
    "VerificationCell",
    "VerificationReport",
    # Helpers
    "make_universe",
    "make_map",
    "make_maps",
]
