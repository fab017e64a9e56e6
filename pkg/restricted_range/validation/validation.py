import re
from typing import Iterable, List, Optional, Sequence

from ..schemas import (
    ErrorCode,
    KernelPartition,
    SemigroupError,
    Transformation,
    Universe,
    ValidationError,
    ValidationResult,
)

_POINT = re.compile(r"[0-9]+")


def _is_point(text: str) -> bool:
    """ASCII decimal digits only."""
    return _POINT.fullmatch(text) is not None


# =============================================================================
# Universes
# =============================================================================

def is_valid_universe(n: int, m: int, k: int) -> ValidationResult[Universe]:
    errors: List[ValidationError] = []

    for name, value in (("n", n), ("m", m), ("k", k)):
        if value < 1:
            errors.append(
                ValidationError(
                    message=f"{name} = {value} must be at least 1.",
                    code=ErrorCode.INVALID_UNIVERSE,
                    severity="error",
                    suggestion="X, Y and Z are nonempty.",
                )
            )
    if errors:
        return ValidationResult.failure(None, errors)

    if k > m:
        errors.append(
            ValidationError(
                message=f"k = {k} exceeds m = {m}; Z must be a subset of Y.",
                code=ErrorCode.INVALID_UNIVERSE,
                severity="error",
                suggestion=f"Choose k ≤ {m}.",
            )
        )
    if m > n:
        errors.append(
            ValidationError(
                message=f"m = {m} exceeds n = {n}; Y must be a subset of X.",
                code=ErrorCode.INVALID_UNIVERSE,
                severity="error",
                suggestion=f"Choose m ≤ {n}.",
            )
        )
    if errors:
        return ValidationResult.failure(None, errors)

    return ValidationResult.success(Universe(n=n, m=m, k=k))


# =============================================================================
# Map literals
# =============================================================================

def parse_map(literal: str, n: int) -> ValidationResult[Transformation]:
    """Parse a map literal of length n; every problem is reported, not just the first."""
    parts = [part.strip() for part in literal.split(",")] if literal.strip() else []
    if not parts or any(not _is_point(part) for part in parts):
        return ValidationResult.failure(None, [
            ValidationError(
                message=f"'{literal}' is not a map literal.",
                code=ErrorCode.INVALID_LITERAL,
                severity="error",
                suggestion="Write the images of 0,1,…,n−1 separated by commas, e.g. 0,0,2.",
            )
        ])

    errors: List[ValidationError] = []
    images = [int(part) for part in parts]
    if len(images) != n:
        errors.append(
            ValidationError(
                message=f"The map has {len(images)} images but X has {n} points.",
                code=ErrorCode.DIMENSION_MISMATCH,
                severity="error",
                suggestion=f"Give exactly {n} images.",
            )
        )
    for x, image in enumerate(images):
        if image >= n:
            errors.append(
                ValidationError(
                    message=f"Point {x} is sent to {image}, outside X = {{0,…,{n - 1}}}.",
                    code=ErrorCode.POINT_OUT_OF_RANGE,
                    severity="error",
                )
            )
    if errors:
        return ValidationResult.failure(None, errors)

    return ValidationResult.success(Transformation.from_literal(literal, n))


def parse_member(literal: str, u: Universe) -> ValidationResult[Transformation]:
    """Parse a map literal and check Yα ⊆ Z; non-members come back with the offending points."""
    parsed = parse_map(literal, u.n)
    if not parsed.ok:
        return parsed
    a = parsed.value
    errors = [
        ValidationError(
            message=f"Point {y} of Y is sent to {a[y]}, outside Z = {{0,…,{u.k - 1}}}.",
            code=ErrorCode.NOT_MEMBER,
            severity="error",
            suggestion=f"Points 0..{u.m - 1} must map below {u.k}.",
        )
        for y in u.y
        if a[y] >= u.k
    ]
    if errors:
        return ValidationResult.failure(a, errors)
    return ValidationResult.success(a)


# =============================================================================
# Partitions
# =============================================================================

def is_valid_partition(n: int, blocks: Iterable[Sequence[int]]) -> ValidationResult[KernelPartition]:
    try:
        return ValidationResult.success(KernelPartition.of(n, blocks))
    except SemigroupError as exc:
        return ValidationResult.failure(None, [exc.error])


def parse_partition(text: str, n: int) -> ValidationResult[KernelPartition]:
    """Parse blocks written as "0,1|2", separated by '|'."""
    blocks: List[List[int]] = []
    problem: Optional[str] = None
    for chunk in text.split("|"):
        points = [part.strip() for part in chunk.split(",")]
        if not chunk.strip() or any(not _is_point(p) for p in points):
            problem = f"'{chunk}' is not a block of points."
            break
        blocks.append([int(p) for p in points])
    if problem:
        return ValidationResult.failure(None, [
            ValidationError(
                message=problem,
                code=ErrorCode.INVALID_PARTITION,
                severity="error",
                suggestion="Separate blocks with '|' and points with ',', e.g. 0,1|2.",
            )
        ])
    return is_valid_partition(n, blocks)
