"""
Semigroup Algorithms

Computation on T(X,Y,Z):
- Transformation primitives (composition, images, kernels)
- Membership and lazy enumeration
- Regularity, quasi-inverses and idempotents
- Starred Green's relations, their oracles and abundance
- Exact counting formulas
"""

from .core import (
    identity,
    constant,
    compose,
    image_of,
    kernel_of,
    agree_on,
    restrict,
    parse_transformation,
    format_transformation,
)
from .semigroup import (
    ElementStream,
    is_member,
    enumerate_members,
    enumerate_stratum,
    enumerate_filtered,
    random_member,
    members,
)
from .structure import (
    is_regular_element,
    quasi_inverse,
    regularity_witness,
    is_regular_by_search,
    regular_stratum,
    is_regular_semigroup,
    nonregular_witness,
    is_idempotent,
    idempotent_with_kernel,
)
from .relations import (
    RelationOracle,
    oracle_for,
    lambda_flag,
    lambda_related,
    lstar_related,
    rstar_related,
    lstar_oracle,
    rstar_oracle,
    left_ideal,
    right_ideal,
    l_related,
    r_related,
    relation_classes,
    classes_with_idempotent,
    abundance_table,
    abundance,
)
from .counting import (
    binomial,
    stirling2,
    stirling2_alternating,
    order_stratum,
    order,
    regular_stratum_count,
    regular_count,
    idempotent_rank_count,
    idempotent_count,
    order_invariant_set,
    order_restricted_range,
    regular_invariant_set,
    regular_restricted_range,
    idempotent_invariant_set,
    idempotent_restricted_range,
    idempotent_full,
)

__all__ = [
    # Primitives
    "identity",
    "constant",
    "compose",
    "image_of",
    "kernel_of",
    "agree_on",
    "restrict",
    "parse_transformation",
    "format_transformation",
    # Membership and enumeration
    "ElementStream",
    "is_member",
    "enumerate_members",
    "enumerate_stratum",
    "enumerate_filtered",
    "random_member",
    "members",
    # Regularity and idempotents
    "is_regular_element",
    "quasi_inverse",
    "regularity_witness",
    "is_regular_by_search",
    "regular_stratum",
    "is_regular_semigroup",
    "nonregular_witness",
    "is_idempotent",
    "idempotent_with_kernel",
    # Relations
    "RelationOracle",
    "oracle_for",
    "lambda_flag",
    "lambda_related",
    "lstar_related",
    "rstar_related",
    "lstar_oracle",
    "rstar_oracle",
    "left_ideal",
    "right_ideal",
    "l_related",
    "r_related",
    "relation_classes",
    "classes_with_idempotent",
    "abundance_table",
    "abundance",
    # Counting
    "binomial",
    "stirling2",
    "stirling2_alternating",
    "order_stratum",
    "order",
    "regular_stratum_count",
    "regular_count",
    "idempotent_rank_count",
    "idempotent_count",
    "order_invariant_set",
    "order_restricted_range",
    "regular_invariant_set",
    "regular_restricted_range",
    "idempotent_invariant_set",
    "idempotent_restricted_range",
    "idempotent_full",
]
