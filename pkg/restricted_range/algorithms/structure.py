"""
Regularity and Idempotents

Element-level regularity (Xα ∩ Y ⊆ Zα), the explicit quasi-inverse
construction, the regular-semigroup classification with its non-regular
witnesses, idempotency and idempotents with a prescribed kernel.
"""

import logging
from typing import Dict, Optional

from ..schemas import (
    CaseTag,
    ErrorCode,
    KernelPartition,
    NotMemberError,
    NotRegularError,
    RegularityWitness,
    SemigroupError,
    Transformation,
    Universe,
)
from .core import compose
from .semigroup import enumerate_members, is_member

logger = logging.getLogger(__name__)


def _require_member(u: Universe, a: Transformation) -> None:
    if not is_member(u, a):
        raise NotMemberError.of(
            ErrorCode.NOT_MEMBER,
            f"{a} is not a member of T{u}: some point of Y is not mapped into Z.",
            suggestion=f"Points 0..{u.m - 1} must map below {u.k}.",
        )


# =============================================================================
# Regular elements
# =============================================================================

def is_regular_element(u: Universe, a: Transformation) -> bool:
    """
    True iff Xα ∩ Y ⊆ Zα, equivalently Xα ∩ Y = Zα.

    With k = m this reads Xα ∩ Y ⊆ Yα, and with m = n it reads Xα ⊆ Zα.
    """
    _require_member(u, a)
    z_image = set(a.images[: u.k])
    return all(t in z_image for t in set(a.images) if t < u.m)


def quasi_inverse(u: Universe, a: Transformation) -> Transformation:
    """
    Build β in T(X,Y,Z) with αβα = α.

    Writing Xα ∩ Y = {ȳ₁ < … < ȳ_s}, each ȳᵢ is sent to the smallest zᵢ ∈ Z
    with zᵢα = ȳᵢ; each x ∈ Xα∖Y goes to its smallest preimage t_x; every
    other point goes to z₁.
    """
    if not is_regular_element(u, a):
        raise NotRegularError.of(
            ErrorCode.NOT_REGULAR,
            f"{a} is not regular in T{u}: Xα ∩ Y is not contained in Zα.",
        )
    smallest_preimage: Dict[int, int] = {}
    for x, image in enumerate(a.images):
        smallest_preimage.setdefault(image, x)

    # ȳ ∈ Xα ∩ Y has a preimage in Z, and the smallest preimage overall is then in Z
    hits = sorted(t for t in smallest_preimage if t < u.m)
    z_first = smallest_preimage[hits[0]]
    beta = [z_first] * u.n
    for t, x in smallest_preimage.items():
        beta[t] = x

    result = Transformation.model_construct(images=tuple(beta))
    assert is_member(u, result) and compose(compose(a, result), a) == a
    return result


def regularity_witness(u: Universe, a: Transformation) -> RegularityWitness:
    return RegularityWitness(element=a, quasi_inverse=quasi_inverse(u, a))


def is_regular_by_search(u: Universe, a: Transformation) -> Optional[Transformation]:
    """Brute force: the first β in enumeration order with αβα = α, if any."""
    _require_member(u, a)
    for beta in enumerate_members(u):
        if compose(compose(a, beta), a) == a:
            return beta
    return None


def regular_stratum(u: Universe, a: Transformation) -> int:
    """|Zα|, the stratum a regular element is counted in."""
    _require_member(u, a)
    return len(set(a.images[: u.k]))


def is_regular_semigroup(u: Universe) -> bool:
    """Regular iff |Y| = 1, or X = Y with |Z| = 1, or Z = Y = X."""
    return u.m == 1 or (u.n == u.m and u.k == 1) or u.n == u.m == u.k


def nonregular_witness(u: Universe) -> Transformation:
    """
    A member that is not regular, for a universe whose semigroup is not regular.

    Z ⊊ Y ⊊ X: Y ↦ 0 and X∖Y ↦ k (the smallest point of Y∖Z).
    Z = Y ⊊ X: Y ↦ 0 and X∖Y ↦ 1.
    Z ⊊ Y = X: Z ↦ 0 and Y∖Z ↦ 1.
    In each case Xα ∩ Y = {0, y} while Zα = {0}.
    """
    if is_regular_semigroup(u):
        raise SemigroupError.of(
            ErrorCode.SEMIGROUP_REGULAR,
            f"T{u} is a regular semigroup; it has no non-regular element.",
        )
    tag = u.case_tag
    if tag is CaseTag.PROPER:
        images = [0] * u.m + [u.k] * (u.n - u.m)
    elif tag is CaseTag.INVARIANT_SET:
        images = [0] * u.m + [1] * (u.n - u.m)
    else:
        images = [0] * u.k + [1] * (u.m - u.k)
    witness = Transformation.model_construct(images=tuple(images))
    assert is_member(u, witness) and not is_regular_element(u, witness)
    return witness


# =============================================================================
# Idempotents
# =============================================================================

def is_idempotent(u: Universe, a: Transformation) -> bool:
    """True iff Xα ⊆ Z ∪ (X∖Y) and tα = t for every t ∈ Xα."""
    _require_member(u, a)
    image = set(a.images)
    verdict = all((t < u.k or t >= u.m) and a.images[t] == t for t in image)
    assert verdict == (compose(a, a) == a)
    return verdict


def idempotent_with_kernel(u: Universe, p: KernelPartition) -> Optional[Transformation]:
    """
    An idempotent e with π_e = p, or None when none exists.

    Each block is sent to a representative: its smallest point of Z when the
    block meets Y, else its smallest point. A block meeting Y but missing Z
    admits no representative, and then no idempotent has kernel p.
    """
    if p.n != u.n:
        raise SemigroupError.of(
            ErrorCode.DIMENSION_MISMATCH,
            f"Partition of {p.n} points does not partition X of universe {u}.",
        )
    images = [0] * u.n
    for block in p.blocks:
        if block[0] < u.m:
            in_z = [x for x in block if x < u.k]
            if not in_z:
                logger.debug("block %s meets Y but misses Z; no idempotent has kernel %s", block, p)
                return None
            representative = in_z[0]
        else:
            representative = block[0]
        for x in block:
            images[x] = representative
    e = Transformation.model_construct(images=tuple(images))
    assert is_idempotent(u, e)
    return e
