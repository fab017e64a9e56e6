"""
Transformation Schemas

Total maps on X = {0,…,n−1} together with the canonical set and partition
types derived from them (ranges and kernels).
"""

import re
from typing import Any, Iterable, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_serializer, model_validator

from .result import ErrorCode, SemigroupError


class Transformation(BaseModel):
    """
    A total map on {0,…,n−1}, stored as its image list.

    Functions are written on the right: the literal "0,0,2" means
    0 ↦ 0, 1 ↦ 0, 2 ↦ 2. Serializes to (and validates from) that literal.
    """
    model_config = ConfigDict(frozen=True)

    images: Tuple[int, ...] = Field(..., min_length=1, description="x ↦ images[x]")

    @model_validator(mode="before")
    @classmethod
    def _accept_literal(cls, data: Any) -> Any:
        if isinstance(data, str):
            try:
                return {"images": _parse_literal(data)}
            except SemigroupError as exc:
                raise ValueError(str(exc)) from exc
        if isinstance(data, (list, tuple)):
            return {"images": tuple(data)}
        return data

    @model_validator(mode="after")
    def _check_range(self) -> "Transformation":
        n = len(self.images)
        for x, image in enumerate(self.images):
            if not 0 <= image < n:
                raise ValueError(f"image {image} of point {x} is outside [0,{n})")
        return self

    @model_serializer
    def _to_literal(self) -> str:
        return str(self)

    @classmethod
    def from_literal(cls, literal: str, n: Optional[int] = None) -> "Transformation":
        images = _parse_literal(literal)
        if n is not None and len(images) != n:
            raise SemigroupError.of(
                ErrorCode.DIMENSION_MISMATCH,
                f"Map literal '{literal}' has {len(images)} entries, expected n = {n}.",
                suggestion="Give exactly one image per point of X.",
            )
        for x, image in enumerate(images):
            if not 0 <= image < len(images):
                raise SemigroupError.of(
                    ErrorCode.POINT_OUT_OF_RANGE,
                    f"Image {image} of point {x} is outside X = {{0,…,{len(images) - 1}}}.",
                    suggestion="Images are 0-based points of X.",
                )
        return cls.model_construct(images=images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __getitem__(self, x: int) -> int:
        return self.images[x]

    def __lt__(self, other: "Transformation") -> bool:
        return (self.n, self.images) < (other.n, other.images)

    def __str__(self) -> str:
        return ",".join(str(image) for image in self.images)

    def __repr__(self) -> str:
        return f"Transformation({str(self)!r})"


_INTEGER = re.compile(r"-?[0-9]+")


def _parse_literal(literal: str) -> Tuple[int, ...]:
    parts = [part.strip() for part in literal.strip().split(",")]
    if not literal.strip() or any(_INTEGER.fullmatch(part) is None for part in parts):
        raise SemigroupError.of(
            ErrorCode.INVALID_LITERAL,
            f"Invalid map literal '{literal}'. Expected comma-separated 0-based images, e.g. '0,0,2'.",
        )
    return tuple(int(part) for part in parts)


class ImageSet(BaseModel):
    """An ordered subset of X: strictly increasing, duplicate-free."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    members: Tuple[int, ...] = Field(default=())

    @model_validator(mode="after")
    def _check_canonical(self) -> "ImageSet":
        if any(a >= b for a, b in zip(self.members, self.members[1:])):
            raise ValueError("members must be strictly increasing")
        if self.members and not (0 <= self.members[0] and self.members[-1] < self.n):
            raise ValueError(f"members must lie in [0,{self.n})")
        return self

    @classmethod
    def of(cls, n: int, points: Iterable[int]) -> "ImageSet":
        return cls(n=n, members=tuple(sorted(set(points))))

    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def issubset(self, other: "ImageSet") -> bool:
        return self.as_set() <= other.as_set()

    def __and__(self, other: "ImageSet") -> "ImageSet":
        return ImageSet.of(self.n, self.as_set() & other.as_set())

    def __contains__(self, point: int) -> bool:
        return point in self.as_set()

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self.members) + "}"


class KernelPartition(BaseModel):
    """
    A partition of X into nonempty blocks, in canonical form:
    each block ascending, blocks ordered by their minimum.
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    blocks: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_canonical(self) -> "KernelPartition":
        problem = _partition_problem(self.n, self.blocks)
        if problem:
            raise ValueError(problem)
        if tuple(sorted(tuple(sorted(b)) for b in self.blocks)) != self.blocks:
            raise ValueError("blocks are not in canonical form")
        return self

    @classmethod
    def of(cls, n: int, blocks: Iterable[Iterable[int]]) -> "KernelPartition":
        """Canonicalize an arbitrary block list; raise when it is not a partition of X."""
        listed = [tuple(block) for block in blocks]
        problem = _partition_problem(n, listed)
        if problem:
            raise SemigroupError.of(ErrorCode.INVALID_PARTITION, problem)
        return cls(n=n, blocks=tuple(sorted(tuple(sorted(b)) for b in listed)))

    def block_of(self, point: int) -> Tuple[int, ...]:
        for block in self.blocks:
            if point in block:
                return block
        raise KeyError(point)

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


def _partition_problem(n: int, blocks: Iterable[Tuple[int, ...]]) -> Optional[str]:
    seen: set[int] = set()
    for block in blocks:
        if not block:
            return "blocks must be nonempty"
        for point in block:
            if not 0 <= point < n:
                return f"point {point} is outside X = {{0,…,{n - 1}}}"
            if point in seen:
                return f"point {point} appears in more than one block"
            seen.add(point)
    if len(seen) != n:
        missing = sorted(set(range(n)) - seen)
        return f"blocks do not cover X; missing {missing}"
    return None
