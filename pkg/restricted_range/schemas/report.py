"""
Report Schemas

Structured outputs: regularity witnesses, relation classes, abundance
verdicts, CLI results and verification reports.
"""

from enum import Enum
from typing import List, Optional, Union

from pydantic import BaseModel, Field, computed_field, field_serializer, model_validator

from .transformation import Transformation
from .universe import Universe


class RegularityWitness(BaseModel):
    """An element together with a quasi-inverse: element·quasi_inverse·element = element."""
    element: Transformation
    quasi_inverse: Transformation


class RelationKind(str, Enum):
    LAMBDA = "lambda"
    LSTAR = "lstar"
    RSTAR = "rstar"


class ClassMethod(str, Enum):
    CHARACTERIZATION = "characterization"
    ORACLE = "oracle"


class RelationClasses(BaseModel):
    """
    The partition of a semigroup under one relation.

    Classes are ordered by their smallest member and each class is listed in
    enumeration order.
    """
    universe: Universe
    kind: RelationKind
    method: ClassMethod
    classes: List[List[Transformation]] = Field(default_factory=list)

    def class_of(self, element: Transformation) -> List[Transformation]:
        for members in self.classes:
            if element in members:
                return members
        raise KeyError(str(element))


class AbundanceVerdict(BaseModel):
    """
    Left/right abundance of a semigroup.

    A side that fails may carry a witness: a class of the corresponding
    starred relation containing no idempotent.
    """
    left: bool
    right: bool
    left_witness: Optional[List[Transformation]] = None
    right_witness: Optional[List[Transformation]] = None

    @model_validator(mode="after")
    def _check_witnesses(self) -> "AbundanceVerdict":
        if self.left and self.left_witness is not None:
            raise ValueError("a left-abundant verdict cannot carry an L*-witness")
        if self.right and self.right_witness is not None:
            raise ValueError("a right-abundant verdict cannot carry an R*-witness")
        for witness in (self.left_witness, self.right_witness):
            if witness is not None and not witness:
                raise ValueError("witness classes are nonempty")
        return self

    @computed_field
    @property
    def witness_class(self) -> Optional[List[Transformation]]:
        return self.left_witness if self.left_witness is not None else self.right_witness

    @property
    def abundant(self) -> bool:
        return self.left and self.right

    def pair(self) -> str:
        return f"({str(self.left).lower()}, {str(self.right).lower()})"


class CountResult(BaseModel):
    """JSON schema of the count command: {n, m, k, what, value}."""
    n: int
    m: int
    k: int
    what: str
    r: Optional[int] = None
    value: int

    @field_serializer("value")
    def _decimal(self, value: int) -> str:
        return str(value)


class RelationResult(BaseModel):
    universe: Universe
    relation: RelationKind
    method: ClassMethod
    a: Transformation
    b: Transformation
    related: bool


CellValue = Union[bool, int, str]


class VerificationCell(BaseModel):
    """
    One comparison of an expected value against an actual one.

    Counts serialize as decimal strings.
    """
    universe: Optional[Universe] = None
    check: str
    expected: CellValue
    actual: CellValue
    passed: bool

    @field_serializer("expected", "actual")
    def _decimal(self, value: CellValue) -> Union[bool, str]:
        if isinstance(value, bool):
            return value
        return str(value)

    def sort_key(self) -> tuple:
        where = self.universe.as_tuple() if self.universe else (0, 0, 0)
        return (where, self.check)


class VerificationReport(BaseModel):
    """
    Outcome of one verify suite.

    JSON schema: {suite, cells[], overall}. Elapsed time is kept for logging
    and left out of the serialized form so reports compare byte for byte.
    """
    suite: str
    cells: List[VerificationCell] = Field(default_factory=list)
    elapsed: float = Field(default=0.0, exclude=True, description="Seconds")

    @computed_field
    @property
    def overall(self) -> bool:
        return all(cell.passed for cell in self.cells)

    @property
    def failures(self) -> List[VerificationCell]:
        return [cell for cell in self.cells if not cell.passed]
