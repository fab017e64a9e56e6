"""
Verification Harness

Pits every characterization and formula against brute force over ranges of
universes and returns a VerificationReport.

Each verify_* function accepts keyword overrides for the predicate or
formula under test, so a mutated implementation can be substituted and the
harness shown to fail.
"""

import logging
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, Iterator, List, Optional

from ..algorithms.core import compose, kernel_of
from ..algorithms.counting import (
    binomial,
    idempotent_count,
    idempotent_full,
    idempotent_invariant_set,
    idempotent_rank_count,
    idempotent_restricted_range,
    order,
    order_invariant_set,
    order_restricted_range,
    order_stratum,
    regular_count,
    regular_invariant_set,
    regular_restricted_range,
    regular_stratum_count,
    stirling2,
    stirling2_alternating,
)
from ..algorithms.relations import (
    abundance,
    abundance_table,
    lambda_flag,
    left_ideal,
    lstar_related,
    oracle_for,
    right_ideal,
    rstar_related,
)
from ..algorithms.semigroup import enumerate_members, is_member, members
from ..algorithms.structure import (
    idempotent_with_kernel,
    is_idempotent,
    is_regular_by_search,
    is_regular_element,
    is_regular_semigroup,
    nonregular_witness,
    quasi_inverse,
    regular_stratum,
)
from ..schemas import (
    AbundanceVerdict,
    CaseTag,
    ErrorCode,
    NotRegularError,
    Params,
    SemigroupError,
    Transformation,
    Universe,
    VerificationCell,
    VerificationReport,
)

logger = logging.getLogger(__name__)

SUITES = ("counts", "relations", "regularity", "abundance", "stirling", "witnesses")

UniverseCheck = Callable[[Universe], List[VerificationCell]]


# =============================================================================
# Harness plumbing
# =============================================================================

def universes(max_n: int) -> Iterator[Universe]:
    """Every canonical universe with 1 ≤ k ≤ m ≤ n ≤ max_n, in (n, m, k) order."""
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            for k in range(1, m + 1):
                yield Universe(n=n, m=m, k=k)


def _check_bound(suite: str, max_n: int, limit: int) -> None:
    if not 1 <= max_n <= limit:
        raise SemigroupError.of(
            ErrorCode.VERIFICATION_BOUND,
            f"Suite '{suite}' accepts 1 ≤ max_n ≤ {limit}, got {max_n}.",
            suggestion="Raise the bound in Params to verify larger universes.",
        )


def _cell(u: Optional[Universe], check: str, expected, actual) -> VerificationCell:
    return VerificationCell(universe=u, check=check, expected=expected, actual=actual, passed=expected == actual)


def _report(suite: str, cells: List[VerificationCell], started: float) -> VerificationReport:
    report = VerificationReport(
        suite=suite,
        cells=sorted(cells, key=VerificationCell.sort_key),
        elapsed=time.perf_counter() - started,
    )
    for cell in report.failures:
        logger.warning("%s: %s %s expected %s, got %s", suite, cell.universe, cell.check, cell.expected, cell.actual)
    logger.info(
        "suite %s: %d cells, %d failed, %.2fs",
        suite, len(report.cells), len(report.failures), report.elapsed,
    )
    return report


def _over_universes(suite: str, max_n: int, check: UniverseCheck, params: Params) -> VerificationReport:
    """Run check on every universe, in a thread pool when params.workers > 1."""
    started = time.perf_counter()

    def run(u: Universe) -> List[VerificationCell]:
        logger.debug("%s: verifying %s", suite, u)
        return check(u)

    targets = list(universes(max_n))
    if params.workers > 1:
        with ThreadPoolExecutor(max_workers=params.workers) as pool:
            batches = list(pool.map(run, targets))
    else:
        batches = [run(u) for u in targets]
    return _report(suite, [cell for batch in batches for cell in batch], started)


# =============================================================================
# Counting
# =============================================================================

def verify_counts(
    max_n: Optional[int] = None,
    params: Optional[Params] = None,
    *,
    order_fn: Callable[[Universe], int] = order,
    regular_count_fn: Callable[[Universe], int] = regular_count,
    idempotent_count_fn: Callable[[Universe], int] = idempotent_count,
    order_stratum_fn: Callable[[Universe, int], int] = order_stratum,
) -> VerificationReport:
    """Closed formulas against filtered enumeration, in total and per stratum."""
    params = params or Params()
    max_n = params.count_max_n if max_n is None else max_n
    _check_bound("counts", max_n, params.count_max_n)

    def check(u: Universe) -> List[VerificationCell]:
        total = 0
        regular = 0
        idempotent = 0
        strata: Counter = Counter()
        regular_strata: Counter = Counter()
        ranks: Counter = Counter()
        for a in enumerate_members(u):
            total += 1
            strata[len(set(a.images[: u.m]))] += 1
            if is_regular_element(u, a):
                regular += 1
                regular_strata[regular_stratum(u, a)] += 1
            if is_idempotent(u, a):
                idempotent += 1
                ranks[len(set(a.images))] += 1

        cells = [
            _cell(u, "order", order_fn(u), total),
            _cell(u, "regular_count", regular_count_fn(u), regular),
            _cell(u, "idempotent_count", idempotent_count_fn(u), idempotent),
        ]
        for r in range(1, u.k + 1):
            cells.append(_cell(u, f"order_stratum[{r}]", order_stratum_fn(u, r), strata[r]))
            cells.append(_cell(u, f"regular_stratum[{r}]", regular_stratum_count(u, r), regular_strata[r]))
        for r in range(1, u.n - u.m + u.k + 1):
            cells.append(_cell(u, f"idempotent_rank[{r}]", idempotent_rank_count(u, r), ranks[r]))
        cells.extend(_family_cells(u, total, regular, idempotent))
        return cells

    return _over_universes("counts", max_n, check, params)


def _family_cells(u: Universe, total: int, regular: int, idempotent: int) -> List[VerificationCell]:
    """The specialized formulas of T(X), T(X,Z) and T̄(X,Y) against the same enumeration."""
    n, m, k = u.as_tuple()
    tag = u.case_tag
    if tag is CaseTag.RESTRICTED_RANGE:
        family = (order_restricted_range(n, k), regular_restricted_range(n, k), idempotent_restricted_range(n, k))
    elif tag is CaseTag.INVARIANT_SET:
        family = (order_invariant_set(n, m), regular_invariant_set(n, m), idempotent_invariant_set(n, m))
    elif tag is CaseTag.FULL:
        family = (n ** n, n ** n, idempotent_full(n))
    else:
        return []
    return [
        _cell(u, "family_order", family[0], total),
        _cell(u, "family_regular", family[1], regular),
        _cell(u, "family_idempotent", family[2], idempotent),
    ]


def verify_stirling(
    max_n: Optional[int] = None,
    params: Optional[Params] = None,
    *,
    stirling: Callable[[int, int], int] = stirling2,
) -> VerificationReport:
    """
    Σ_{r=1}^{k} C(k,r) r! S(m,r) = k^m for 1 ≤ k ≤ m ≤ max_n, and the
    recurrence against the alternating sum for 0 ≤ r ≤ n ≤ max_n.
    """
    params = params or Params()
    max_n = params.stirling_max_n if max_n is None else max_n
    _check_bound("stirling", max_n, params.stirling_max_n)
    started = time.perf_counter()

    cells: List[VerificationCell] = []
    for m in range(1, max_n + 1):
        for k in range(1, m + 1):
            surjection_sum = 0
            factorial_r = 1
            for r in range(1, k + 1):
                factorial_r *= r
                surjection_sum += binomial(k, r) * factorial_r * stirling(m, r)
            cells.append(_cell(None, f"surjection_identity[{m},{k}]", k ** m, surjection_sum))
    for n in range(0, max_n + 1):
        for r in range(0, n + 1):
            cells.append(_cell(None, f"stirling_recurrence[{n},{r}]", stirling2_alternating(n, r), stirling(n, r)))
    return _report("stirling", cells, started)


# =============================================================================
# Relations
# =============================================================================

def verify_relations(
    max_n: Optional[int] = None,
    params: Optional[Params] = None,
    *,
    lstar: Callable[[Universe, Transformation, Transformation], bool] = lstar_related,
    rstar: Callable[[Universe, Transformation, Transformation], bool] = rstar_related,
) -> VerificationReport:
    """
    Characterizations against the oracles on every ordered pair of members.

    Cells count agreeing pairs, so the expected value is |S|². The classical
    inclusions L ⊆ L* and R ⊆ R* are checked the same way.
    """
    params = params or Params()
    max_n = params.relation_max_n if max_n is None else max_n
    _check_bound("relations", max_n, params.relation_max_n)

    def check(u: Universe) -> List[VerificationCell]:
        elements = members(u, params)
        oracle = oracle_for(u, params)
        lstar_signatures = [oracle.lstar_signature(a) for a in elements]
        rstar_signatures = [oracle.rstar_signature(a) for a in elements]
        left_ideals = [left_ideal(u, a, params) for a in elements]
        right_ideals = [right_ideal(u, a, params) for a in elements]

        lstar_agree = rstar_agree = l_inside = r_inside = 0
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                lstar_truth = lstar_signatures[i] == lstar_signatures[j]
                rstar_truth = rstar_signatures[i] == rstar_signatures[j]
                lstar_agree += lstar(u, a, b) == lstar_truth
                rstar_agree += rstar(u, a, b) == rstar_truth
                l_inside += left_ideals[i] != left_ideals[j] or lstar_truth
                r_inside += right_ideals[i] != right_ideals[j] or rstar_truth

        pairs = len(elements) ** 2
        return [
            _cell(u, "lstar_pairs", pairs, lstar_agree),
            _cell(u, "rstar_pairs", pairs, rstar_agree),
            _cell(u, "l_within_lstar", pairs, l_inside),
            _cell(u, "r_within_rstar", pairs, r_inside),
        ]

    return _over_universes("relations", max_n, check, params)


# =============================================================================
# Regularity
# =============================================================================

def verify_regularity(
    max_n: Optional[int] = None,
    params: Optional[Params] = None,
    *,
    is_regular: Callable[[Universe, Transformation], bool] = is_regular_element,
    regular_semigroup: Callable[[Universe], bool] = is_regular_semigroup,
) -> VerificationReport:
    """Element regularity against a brute-force quasi-inverse search, and the semigroup classification."""
    params = params or Params()
    max_n = params.relation_max_n if max_n is None else max_n
    _check_bound("regularity", max_n, params.relation_max_n)

    def check(u: Universe) -> List[VerificationCell]:
        elements = members(u, params)
        agree = 0
        claimed_regular = 0
        constructed = 0
        all_regular = True
        for a in elements:
            searched = is_regular_by_search(u, a) is not None
            verdict = is_regular(u, a)
            agree += verdict == searched
            all_regular = all_regular and searched
            if not verdict:
                continue
            claimed_regular += 1
            try:
                beta = quasi_inverse(u, a)
            except NotRegularError:
                continue
            constructed += is_member(u, beta) and compose(compose(a, beta), a) == a

        return [
            _cell(u, "regular_predicate_vs_search", len(elements), agree),
            _cell(u, "quasi_inverse_postconditions", claimed_regular, constructed),
            _cell(u, "regular_semigroup", regular_semigroup(u), all_regular),
        ]

    return _over_universes("regularity", max_n, check, params)


# =============================================================================
# Abundance
# =============================================================================

def verify_abundance(
    max_n: Optional[int] = None,
    params: Optional[Params] = None,
    *,
    verdict: Callable[[Universe], AbundanceVerdict] = abundance_table,
) -> VerificationReport:
    """The verdict table against class-by-class idempotent checking."""
    params = params or Params()
    max_n = params.relation_max_n if max_n is None else max_n
    _check_bound("abundance", max_n, params.relation_max_n)

    def check(u: Universe) -> List[VerificationCell]:
        expected = verdict(u).pair()
        actual = abundance(u, empirical=True, params=params).pair()
        return [_cell(u, "abundance", expected, actual)]

    return _over_universes("abundance", max_n, check, params)


# =============================================================================
# Witness constructions
# =============================================================================

def two_point_image_element(u: Universe) -> Transformation:
    """Z ↦ 0, Y∖Z ↦ 1 and X∖Y fixed; for |Z| ≥ 2 its R*-class has no idempotent."""
    images = [0] * u.k + [1] * (u.m - u.k) + list(u.x_minus_y)
    return Transformation.model_construct(images=tuple(images))


def verify_witnesses(
    max_n: Optional[int] = None,
    params: Optional[Params] = None,
    *,
    is_regular: Callable[[Universe, Transformation], bool] = is_regular_element,
    lstar: Callable[[Universe, Transformation, Transformation], bool] = lstar_related,
    rstar: Callable[[Universe, Transformation, Transformation], bool] = rstar_related,
) -> VerificationReport:
    """
    The explicit constructions.

    Non-regular universes reject their nonregular_witness. In Z ⊊ Y ⊊ X,
    every member sending a point of X∖Y into Y∖Z lies in an idempotent-free
    L*-class; with |Z| ≥ 2 the two-point-image element lies in an
    idempotent-free R*-class, and with |Z| = 1 every member's kernel is the
    kernel of an idempotent.
    """
    params = params or Params()
    max_n = params.relation_max_n if max_n is None else max_n
    _check_bound("witnesses", max_n, params.relation_max_n)

    def check(u: Universe) -> List[VerificationCell]:
        cells: List[VerificationCell] = []
        if not is_regular_semigroup(u):
            cells.append(_cell(u, "nonregular_witness", False, is_regular(u, nonregular_witness(u))))
        if u.case_tag is not CaseTag.PROPER:
            return cells

        elements = members(u, params)
        idempotents = {a for a in elements if is_idempotent(u, a)}
        flagged = [a for a in elements if lambda_flag(u, a)]
        idempotent_free = sum(
            not any(b in idempotents for b in elements if lstar(u, f, b))
            for f in flagged
        )
        cells.append(_cell(u, "idempotent_free_lstar_classes", len(flagged), idempotent_free))

        if u.k >= 2:
            f = two_point_image_element(u)
            r_class = [b for b in elements if rstar(u, f, b)]
            r_class_free = bool(r_class) and not any(b in idempotents for b in r_class)
            cells.append(_cell(u, "idempotent_free_rstar_class", True, r_class_free))
        else:
            kernels_met = 0
            for a in elements:
                e = idempotent_with_kernel(u, kernel_of(a))
                kernels_met += e is not None and kernel_of(e) == kernel_of(a)
            cells.append(_cell(u, "kernel_idempotents", len(elements), kernels_met))
        return cells

    return _over_universes("witnesses", max_n, check, params)


# =============================================================================
# Dispatcher
# =============================================================================

_RUNNERS: Dict[str, Callable[..., VerificationReport]] = {
    "counts": verify_counts,
    "relations": verify_relations,
    "regularity": verify_regularity,
    "abundance": verify_abundance,
    "stirling": verify_stirling,
    "witnesses": verify_witnesses,
}


def run_suite(name: str, max_n: Optional[int] = None, params: Optional[Params] = None) -> VerificationReport:
    """
    Run one suite by name, or every suite for "all".

    Under "all", max_n applies to every suite except stirling, which keeps
    its own bound; cells are merged and overall is the conjunction.
    """
    params = params or Params()
    if name == "all":
        started = time.perf_counter()
        cells: List[VerificationCell] = []
        for suite in SUITES:
            suite_max = None if suite == "stirling" else max_n
            cells.extend(_RUNNERS[suite](suite_max, params).cells)
        return _report("all", cells, started)
    if name not in _RUNNERS:
        raise SemigroupError.of(
            ErrorCode.USAGE_ERROR,
            f"Unknown suite '{name}'.",
            suggestion="Choose one of " + ", ".join(SUITES + ("all",)) + ".",
        )
    return _RUNNERS[name](max_n, params)
