"""
Starred Green's Relations

The Λ relation, the L*/R* characterizations for Z ⊊ Y ⊊ X (and for T(X)),
exact internal oracles built on the cancellation conditions

    (a, b) ∈ L*  ⟺  for all x, y ∈ S¹: ax = ay ⟺ bx = by
    (a, b) ∈ R*  ⟺  for all x, y ∈ S¹: xa = ya ⟺ xb = yb

plus class partitions and abundance verdicts.

The oracles compare partitions of S¹ instead of looping over quadruples.
For L*, ax = ay holds exactly when x and y agree on Xa, so the partition is
induced by restriction to the image. For R*, the partition is induced by
x ↦ xa itself. S¹ is the materialized semigroup with the identity map
adjoined when it is not a member (the identity is a member iff k = m); the
adjoined identity composes exactly like the identity map.
"""

import logging
from functools import lru_cache
from typing import Callable, Dict, Hashable, List, Optional, Tuple

from ..schemas import (
    AbundanceVerdict,
    CaseTag,
    ClassMethod,
    ErrorCode,
    NotMemberError,
    Params,
    RelationClasses,
    RelationKind,
    SemigroupError,
    Transformation,
    Universe,
)
from .core import identity, restrict
from .semigroup import is_member, members
from .structure import is_idempotent

logger = logging.getLogger(__name__)

Signature = Tuple[int, ...]


def _require_members(u: Universe, *elements: Transformation) -> None:
    for a in elements:
        if not is_member(u, a):
            raise NotMemberError.of(
                ErrorCode.NOT_MEMBER,
                f"{a} is not a member of T{u}.",
            )


def _labels(keys) -> Signature:
    """Canonical form of the partition induced by a key sequence: first-seen labels."""
    seen: Dict[Hashable, int] = {}
    return tuple(seen.setdefault(key, len(seen)) for key in keys)


# =============================================================================
# Oracle over S¹
# =============================================================================

class RelationOracle:
    """
    Materialized S¹ of one universe with memoized oracle signatures.

    Signatures are computed once per image set (L*) or per element (R*);
    recomputation under concurrent use is harmless.
    """

    def __init__(self, universe: Universe, params: Optional[Params] = None):
        self.universe = universe
        elements = members(universe, params)
        if universe.k != universe.m:
            elements.append(identity(universe.n))
        self.s1: List[Transformation] = elements
        self._lstar: Dict[Tuple[int, ...], Signature] = {}
        self._rstar: Dict[Tuple[int, ...], Signature] = {}
        logger.debug("oracle for %s over |S¹| = %d", universe, len(elements))

    def lstar_signature(self, a: Transformation) -> Signature:
        image = tuple(sorted(set(a.images)))
        signature = self._lstar.get(image)
        if signature is None:
            signature = _labels(restrict(x, image) for x in self.s1)
            self._lstar[image] = signature
        return signature

    def rstar_signature(self, a: Transformation) -> Signature:
        signature = self._rstar.get(a.images)
        if signature is None:
            images = a.images
            signature = _labels(tuple(images[i] for i in x.images) for x in self.s1)
            self._rstar[a.images] = signature
        return signature


@lru_cache(maxsize=16)
def _oracle(u: Universe, bound: int) -> RelationOracle:
    return RelationOracle(u, Params(materialization_bound=bound))


def oracle_for(u: Universe, params: Optional[Params] = None) -> RelationOracle:
    params = params or Params()
    return _oracle(u, params.materialization_bound)


def lstar_oracle(u: Universe, a: Transformation, b: Transformation, params: Optional[Params] = None) -> bool:
    _require_members(u, a, b)
    oracle = oracle_for(u, params)
    return oracle.lstar_signature(a) == oracle.lstar_signature(b)


def rstar_oracle(u: Universe, a: Transformation, b: Transformation, params: Optional[Params] = None) -> bool:
    _require_members(u, a, b)
    oracle = oracle_for(u, params)
    return oracle.rstar_signature(a) == oracle.rstar_signature(b)


# =============================================================================
# Characterizations
# =============================================================================

def lambda_flag(u: Universe, a: Transformation) -> bool:
    """Whether (X∖Y)α ∩ (Y∖Z) is nonempty."""
    return any(u.k <= a.images[x] < u.m for x in u.x_minus_y)


def lambda_related(u: Universe, a: Transformation, b: Transformation) -> bool:
    """(a, b) ∈ Λ iff (X∖Y)a ∩ (Y∖Z) and (X∖Y)b ∩ (Y∖Z) are both empty or both not."""
    _require_members(u, a, b)
    if u.case_tag is not CaseTag.PROPER:
        raise SemigroupError.of(
            ErrorCode.WRONG_CASE,
            f"Λ is defined for Z ⊊ Y ⊊ X; universe {u} is {u.case_tag.value}.",
        )
    return lambda_flag(u, a) == lambda_flag(u, b)


def _image_outside_y(u: Universe, a: Transformation) -> frozenset:
    return frozenset(t for t in a.images if t >= u.m)


def lstar_key(u: Universe, a: Transformation, params: Optional[Params] = None) -> Hashable:
    """A value equal for two members exactly when they are L*-related."""
    tag = u.case_tag
    if tag is CaseTag.PROPER and u.k == 1:
        return (lambda_flag(u, a), _image_outside_y(u, a))
    if tag in (CaseTag.PROPER, CaseTag.FULL):
        return frozenset(a.images)
    return oracle_for(u, params).lstar_signature(a)


def rstar_key(u: Universe, a: Transformation, params: Optional[Params] = None) -> Hashable:
    """A value equal for two members exactly when they are R*-related."""
    if u.case_tag in (CaseTag.PROPER, CaseTag.FULL):
        return _kernel_labels(a)
    return oracle_for(u, params).rstar_signature(a)


def _kernel_labels(a: Transformation) -> Signature:
    # equal exactly when the kernels are equal
    return _labels(a.images)


def lstar_related(u: Universe, a: Transformation, b: Transformation, params: Optional[Params] = None) -> bool:
    """
    L* by characterization.

    Z ⊊ Y ⊊ X, |Z| = 1: Λ-related and Xa ∩ (X∖Y) = Xb ∩ (X∖Y).
    Z ⊊ Y ⊊ X, |Z| ≥ 2: Xa = Xb.
    Z = Y = X: Xa = Xb.
    Other universes use the oracle.
    """
    _require_members(u, a, b)
    return lstar_key(u, a, params) == lstar_key(u, b, params)


def rstar_related(u: Universe, a: Transformation, b: Transformation, params: Optional[Params] = None) -> bool:
    """R* by characterization: π_a = π_b for Z ⊊ Y ⊊ X and Z = Y = X, else the oracle."""
    _require_members(u, a, b)
    return rstar_key(u, a, params) == rstar_key(u, b, params)


# =============================================================================
# Green's L and R inside the semigroup
# =============================================================================

def _s1(u: Universe, params: Optional[Params]) -> List[Transformation]:
    return oracle_for(u, params).s1


def left_ideal(u: Universe, a: Transformation, params: Optional[Params] = None) -> frozenset:
    """The principal left ideal S¹a as a set of image tuples."""
    images = a.images
    return frozenset(tuple(images[i] for i in x.images) for x in _s1(u, params))


def right_ideal(u: Universe, a: Transformation, params: Optional[Params] = None) -> frozenset:
    """The principal right ideal aS¹ as a set of image tuples."""
    return frozenset(restrict(x, a.images) for x in _s1(u, params))


def l_related(u: Universe, a: Transformation, b: Transformation, params: Optional[Params] = None) -> bool:
    """S¹a = S¹b."""
    _require_members(u, a, b)
    return left_ideal(u, a, params) == left_ideal(u, b, params)


def r_related(u: Universe, a: Transformation, b: Transformation, params: Optional[Params] = None) -> bool:
    """aS¹ = bS¹."""
    _require_members(u, a, b)
    return right_ideal(u, a, params) == right_ideal(u, b, params)


# =============================================================================
# Classes and abundance
# =============================================================================

def _key_function(
    u: Universe, kind: RelationKind, method: ClassMethod, params: Optional[Params]
) -> Callable[[Transformation], Hashable]:
    if kind is RelationKind.LAMBDA:
        if u.case_tag is not CaseTag.PROPER:
            raise SemigroupError.of(
                ErrorCode.WRONG_CASE,
                f"Λ is defined for Z ⊊ Y ⊊ X; universe {u} is {u.case_tag.value}.",
            )
        if method is ClassMethod.ORACLE:
            raise SemigroupError.of(ErrorCode.USAGE_ERROR, "Λ has no oracle; group Λ classes by characterization.")
        return lambda a: lambda_flag(u, a)
    if method is ClassMethod.ORACLE:
        oracle = oracle_for(u, params)
        if kind is RelationKind.LSTAR:
            return oracle.lstar_signature
        return oracle.rstar_signature
    if kind is RelationKind.LSTAR:
        return lambda a: lstar_key(u, a, params)
    return lambda a: rstar_key(u, a, params)


def relation_classes(
    u: Universe,
    kind: RelationKind,
    method: ClassMethod = ClassMethod.CHARACTERIZATION,
    params: Optional[Params] = None,
) -> RelationClasses:
    """Partition the semigroup; classes are ordered by their smallest member."""
    elements = members(u, params)
    key = _key_function(u, kind, method, params)
    grouped: Dict[Hashable, List[Transformation]] = {}
    for a in elements:
        grouped.setdefault(key(a), []).append(a)
    logger.debug("%s %s classes of %s: %d", kind.value, method.value, u, len(grouped))
    return RelationClasses(universe=u, kind=kind, method=method, classes=list(grouped.values()))


def classes_with_idempotent(classes: RelationClasses) -> List[bool]:
    u = classes.universe
    return [any(is_idempotent(u, a) for a in members_) for members_ in classes.classes]


def _first_idempotent_free(classes: RelationClasses) -> Optional[List[Transformation]]:
    for members_, has_idempotent in zip(classes.classes, classes_with_idempotent(classes)):
        if not has_idempotent:
            return members_
    return None


def abundance_table(u: Universe) -> AbundanceVerdict:
    tag = u.case_tag
    if tag in (CaseTag.FULL, CaseTag.INVARIANT_SET):
        return AbundanceVerdict(left=True, right=True)
    if tag is CaseTag.RESTRICTED_RANGE:
        return AbundanceVerdict(left=True, right=u.k == 1)
    if u.k == 1:
        return AbundanceVerdict(left=False, right=True)
    return AbundanceVerdict(left=False, right=False)


def abundance(u: Universe, empirical: bool = False, params: Optional[Params] = None) -> AbundanceVerdict:
    """
    Left/right abundance.

    Without empirical, the verdict table: T(X), T̄(X,Y) and T(X,Z) with
    |Z| = 1 are abundant; T(X,Z) with |Z| ≥ 2 is left but not right
    abundant; Z ⊊ Y ⊊ X is right but not left abundant for |Z| = 1 and
    neither for |Z| ≥ 2.

    With empirical, every L*- and R*-class is checked for an idempotent and
    the first idempotent-free class of a failing side is attached.
    """
    if not empirical:
        return abundance_table(u)
    left_witness = _first_idempotent_free(relation_classes(u, RelationKind.LSTAR, params=params))
    right_witness = _first_idempotent_free(relation_classes(u, RelationKind.RSTAR, params=params))
    return AbundanceVerdict(
        left=left_witness is None,
        right=right_witness is None,
        left_witness=left_witness,
        right_witness=right_witness,
    )
