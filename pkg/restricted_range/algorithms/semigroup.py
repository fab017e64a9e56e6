"""
Semigroup Membership and Enumeration

T(X,Y,Z) = {α ∈ T(X) : Yα ⊆ Z}. Members are produced directly from the
region structure: the Y-portion of the image list counts in base k and the
(X∖Y)-portion in base n, which yields the lexicographic order of image lists.
"""

import logging
import random
from itertools import product
from typing import Callable, Iterator, List, Optional

from ..schemas import (
    ElementFilter,
    ErrorCode,
    MaterializationError,
    Params,
    SemigroupError,
    Transformation,
    Universe,
)

logger = logging.getLogger(__name__)


def _check_dimension(u: Universe, a: Transformation) -> None:
    if a.n != u.n:
        raise SemigroupError.of(
            ErrorCode.DIMENSION_MISMATCH,
            f"Map on {a.n} points does not act on X of universe {u} (n = {u.n}).",
        )


def is_member(u: Universe, a: Transformation) -> bool:
    """True iff Yα ⊆ Z."""
    _check_dimension(u, a)
    k = u.k
    return all(a.images[y] < k for y in u.y)


class ElementStream(Iterator[Transformation]):
    """
    Lazy, single-consumer stream over the members of T(X,Y,Z).

    Yields each qualifying member exactly once, in lexicographic order of
    image lists. Optionally restricted to a filter tag and/or to the stratum
    |Yα| = r.
    """

    def __init__(
        self,
        universe: Universe,
        element_filter: ElementFilter = ElementFilter.ALL,
        stratum: Optional[int] = None,
        predicate: Optional[Callable[[Transformation], bool]] = None,
    ):
        self.universe = universe
        self.element_filter = element_filter
        self.stratum = stratum
        self._predicate = predicate
        ranges = [range(universe.k)] * universe.m + [range(universe.n)] * (universe.n - universe.m)
        self._cursor = product(*ranges)
        self.yielded = 0

    def __iter__(self) -> "ElementStream":
        return self

    def __next__(self) -> Transformation:
        m = self.universe.m
        for images in self._cursor:
            if self.stratum is not None and len(set(images[:m])) != self.stratum:
                continue
            element = Transformation.model_construct(images=images)
            if self._predicate is not None and not self._predicate(element):
                continue
            self.yielded += 1
            return element
        raise StopIteration


def enumerate_members(u: Universe) -> ElementStream:
    """Every member of T(X,Y,Z); k^m · n^(n−m) of them."""
    return ElementStream(u)


def enumerate_stratum(u: Universe, r: int) -> ElementStream:
    """Members with |Yα| = r, for 1 ≤ r ≤ k."""
    if not 1 <= r <= u.k:
        raise SemigroupError.of(
            ErrorCode.STRATUM_OUT_OF_RANGE,
            f"Stratum r = {r} is outside 1 ≤ r ≤ k = {u.k}.",
        )
    return ElementStream(u, stratum=r)


def enumerate_filtered(u: Universe, element_filter: ElementFilter) -> ElementStream:
    """Members passing the filter tag (all, regular or idempotent)."""
    # structure imports this module
    from .structure import is_idempotent, is_regular_element

    predicates = {
        ElementFilter.ALL: None,
        ElementFilter.REGULAR: lambda a: is_regular_element(u, a),
        ElementFilter.IDEMPOTENT: lambda a: is_idempotent(u, a),
    }
    return ElementStream(u, element_filter=element_filter, predicate=predicates[element_filter])


def random_member(u: Universe, seed: int) -> Transformation:
    """
    A uniformly distributed member, deterministic in seed.

    Each Y-point image is drawn from Z and each (X∖Y)-point image from X.
    """
    rng = random.Random(seed)
    images = [rng.randrange(u.k) for _ in u.y] + [rng.randrange(u.n) for _ in u.x_minus_y]
    return Transformation.model_construct(images=tuple(images))


def members(u: Universe, params: Optional[Params] = None) -> List[Transformation]:
    """Materialize the whole semigroup, refusing when it exceeds the configured bound."""
    params = params or Params()
    size = u.k ** u.m * u.n ** (u.n - u.m)
    if size > params.materialization_bound:
        raise MaterializationError.of(
            ErrorCode.MATERIALIZATION_BOUND,
            f"T{u} has {size} elements, above the materialization bound {params.materialization_bound}.",
            suggestion="Raise materialization_bound or choose a smaller universe.",
        )
    logger.debug("materializing %d members of %s", size, u)
    return list(enumerate_members(u))
