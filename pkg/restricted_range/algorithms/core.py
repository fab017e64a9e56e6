"""
Transformation Primitives

Composition, ranges, kernels and restrictions of total maps on
X = {0,…,n−1}. Maps are written on the right, so in compose(a, b) the map
a is applied first.
"""

from typing import Dict, Iterable, List, Tuple

from ..schemas import ErrorCode, ImageSet, KernelPartition, SemigroupError, Transformation


def _check_dimensions(a: Transformation, b: Transformation) -> None:
    if a.n != b.n:
        raise SemigroupError.of(
            ErrorCode.DIMENSION_MISMATCH,
            f"Cannot combine a map on {a.n} points with a map on {b.n} points.",
        )


def _check_region(n: int, region: Iterable[int]) -> Tuple[int, ...]:
    points = tuple(region)
    for point in points:
        if not 0 <= point < n:
            raise SemigroupError.of(
                ErrorCode.POINT_OUT_OF_RANGE,
                f"Region point {point} is outside X = {{0,…,{n - 1}}}.",
            )
    return points


def identity(n: int) -> Transformation:
    return Transformation.model_construct(images=tuple(range(n)))


def constant(n: int, c: int) -> Transformation:
    _check_region(n, (c,))
    return Transformation.model_construct(images=(c,) * n)


def compose(a: Transformation, b: Transformation) -> Transformation:
    """
    Composite a·b: x ↦ (x·a)·b.

    Example:
        >>> compose(Transformation.from_literal("0,0,1"), Transformation.from_literal("0,0,1"))
        Transformation('0,0,0')
    """
    _check_dimensions(a, b)
    images = b.images
    return Transformation.model_construct(images=tuple(images[x] for x in a.images))


def image_of(a: Transformation, region: Iterable[int]) -> ImageSet:
    """The image {x·a : x ∈ region} as a canonical ImageSet."""
    points = _check_region(a.n, region)
    return ImageSet.of(a.n, (a.images[x] for x in points))


def kernel_of(a: Transformation) -> KernelPartition:
    """
    The partition π_a = {x·a⁻¹ : x ∈ Xa}.

    Points are visited in increasing order, so each block is created at its
    minimum and blocks come out already ordered by minimum.
    """
    blocks: Dict[int, List[int]] = {}
    for x, image in enumerate(a.images):
        blocks.setdefault(image, []).append(x)
    return KernelPartition.model_construct(
        n=a.n,
        blocks=tuple(tuple(block) for block in blocks.values()),
    )


def agree_on(a: Transformation, b: Transformation, region: Iterable[int]) -> bool:
    _check_dimensions(a, b)
    points = _check_region(a.n, region)
    return all(a.images[x] == b.images[x] for x in points)


def restrict(a: Transformation, region: Iterable[int]) -> Tuple[int, ...]:
    """The restriction a|_region as the tuple of images in region order."""
    points = _check_region(a.n, region)
    return tuple(a.images[x] for x in points)


def parse_transformation(literal: str, n: int) -> Transformation:
    """Parse a comma-separated 0-based image list of length n, e.g. "0,0,2"."""
    return Transformation.from_literal(literal, n)


def format_transformation(a: Transformation) -> str:
    return str(a)
