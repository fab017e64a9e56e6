"""
Universe Schema

The canonical triple (n, m, k) standing for nested sets Z ⊆ Y ⊆ X with
X = {0,…,n−1}, Y = {0,…,m−1} and Z = {0,…,k−1}.
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class CaseTag(str, Enum):
    """
    Which classical semigroup a universe specializes to.

    FULL             Z = Y = X        T(X)
    RESTRICTED_RANGE Z ⊊ Y = X        T(X,Z)
    INVARIANT_SET    Z = Y ⊊ X        T̄(X,Y)
    PROPER           Z ⊊ Y ⊊ X        T(X,Y,Z)
    """
    FULL = "FULL"
    RESTRICTED_RANGE = "RESTRICTED_RANGE"
    INVARIANT_SET = "INVARIANT_SET"
    PROPER = "PROPER"


_FAMILY_NAMES = {
    CaseTag.FULL: "T(X)",
    CaseTag.RESTRICTED_RANGE: "T(X,Z)",
    CaseTag.INVARIANT_SET: "T̄(X,Y)",
    CaseTag.PROPER: "T(X,Y,Z)",
}


class ElementFilter(str, Enum):
    """Filter tag of an element stream."""
    ALL = "all"
    REGULAR = "regular"
    IDEMPOTENT = "idempotent"


class Universe(BaseModel):
    """
    Canonical universe Z ⊆ Y ⊆ X.

    The regions Z = [0,k), Y∖Z = [k,m) and X∖Y = [m,n) partition X.

    Example:
    {"n": 3, "m": 2, "k": 1}
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="|X|")
    m: int = Field(..., ge=1, description="|Y|")
    k: int = Field(..., ge=1, description="|Z|")

    @model_validator(mode="after")
    def _check_nesting(self) -> "Universe":
        if not self.k <= self.m <= self.n:
            raise ValueError(
                f"expected 1 <= k <= m <= n, got n={self.n}, m={self.m}, k={self.k}"
            )
        return self

    # Regions -----------------------------------------------------------------

    @property
    def x(self) -> range:
        return range(self.n)

    @property
    def y(self) -> range:
        return range(self.m)

    @property
    def z(self) -> range:
        return range(self.k)

    @property
    def y_minus_z(self) -> range:
        return range(self.k, self.m)

    @property
    def x_minus_y(self) -> range:
        return range(self.m, self.n)

    # Classification ----------------------------------------------------------

    @property
    def case_tag(self) -> CaseTag:
        if self.k == self.m == self.n:
            return CaseTag.FULL
        if self.m == self.n:
            return CaseTag.RESTRICTED_RANGE
        if self.k == self.m:
            return CaseTag.INVARIANT_SET
        return CaseTag.PROPER

    @property
    def family(self) -> str:
        return _FAMILY_NAMES[self.case_tag]

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n, self.m, self.k)

    def __str__(self) -> str:
        return f"({self.n},{self.m},{self.k})"
