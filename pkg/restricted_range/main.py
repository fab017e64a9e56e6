"""
Command-line front end.

    restricted-range count --n 3 --m 2 --k 1 --what order
    restricted-range check --n 3 --m 2 --k 1 --map 0,0,2 --property idempotent
    restricted-range verify --suite all --max-n 4

Exit codes: 0 success or a true verdict, 1 a false verdict or a failed
verification, 2 invalid input or usage.
"""

import argparse
import logging
import sys
from itertools import islice
from typing import Callable, Dict, List, Optional

from .algorithms.counting import (
    idempotent_count,
    idempotent_rank_count,
    order,
    order_stratum,
    regular_count,
    regular_stratum_count,
)
from .algorithms.relations import (
    abundance,
    lambda_related,
    lstar_oracle,
    lstar_related,
    relation_classes,
    rstar_oracle,
    rstar_related,
)
from .algorithms.semigroup import ElementStream, enumerate_filtered, enumerate_stratum, is_member
from .algorithms.structure import (
    idempotent_with_kernel,
    is_idempotent,
    is_regular_element,
    is_regular_semigroup,
    nonregular_witness,
    quasi_inverse,
)
from .render import (
    format_errors,
    render_abundance,
    render_classes,
    render_count,
    render_element,
    render_elements,
    render_flag,
    render_relation,
    render_report,
)
from .schemas import (
    ClassMethod,
    CountResult,
    ElementFilter,
    ErrorCode,
    OutputFormat,
    Params,
    RelationKind,
    RelationResult,
    SemigroupError,
    Transformation,
    Universe,
    ValidationError,
)
from .validation.validation import is_valid_universe, parse_map, parse_partition
from .verification import SUITES, run_suite

logger = logging.getLogger(__name__)

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2


class InputError(Exception):
    """Invalid command input, already described as ValidationErrors."""

    def __init__(self, errors: List[ValidationError]):
        super().__init__("; ".join(e.message for e in errors))
        self.errors = errors


def _verdict(value: bool) -> int:
    return EXIT_TRUE if value else EXIT_FALSE


def _universe(args: argparse.Namespace) -> Universe:
    result = is_valid_universe(args.n, args.m, args.k)
    if not result.ok:
        raise InputError(result.errors)
    return result.value


def _map(literal: str, u: Universe) -> Transformation:
    result = parse_map(literal, u.n)
    if not result.ok:
        raise InputError(result.errors)
    return result.value


def _usage(message: str) -> InputError:
    return InputError([ValidationError(message=message, code=ErrorCode.USAGE_ERROR)])


# =============================================================================
# Commands
# =============================================================================

_COUNTS: Dict[str, Callable[[Universe], int]] = {
    "order": order,
    "regular": regular_count,
    "idempotent": idempotent_count,
}

_STRATIFIED_COUNTS: Dict[str, Callable[[Universe, int], int]] = {
    "stratum": order_stratum,
    "regular-stratum": regular_stratum_count,
    "idempotent-rank": idempotent_rank_count,
}


def cmd_count(args: argparse.Namespace, params: Params) -> int:
    u = _universe(args)
    if args.what in _STRATIFIED_COUNTS:
        if args.r is None:
            raise _usage(f"--what {args.what} requires --r.")
        value = _STRATIFIED_COUNTS[args.what](u, args.r)
    else:
        if args.r is not None:
            raise _usage(f"--r is only accepted with --what {'|'.join(_STRATIFIED_COUNTS)}.")
        value = _COUNTS[args.what](u)
    result = CountResult(n=u.n, m=u.m, k=u.k, what=args.what, r=args.r, value=value)
    print(render_count(result, params.output_format))
    return EXIT_TRUE


def cmd_check(args: argparse.Namespace, params: Params) -> int:
    u = _universe(args)
    a = _map(args.map, u)
    checks: Dict[str, Callable[[Universe, Transformation], bool]] = {
        "member": is_member,
        "regular": is_regular_element,
        "idempotent": is_idempotent,
    }
    verdict = checks[args.property](u, a)
    print(render_flag(args.property, verdict, params.output_format))
    return _verdict(verdict)


def cmd_related(args: argparse.Namespace, params: Params) -> int:
    u = _universe(args)
    a = _map(args.a, u)
    b = _map(args.b, u)
    kind = RelationKind(args.relation)
    if kind is RelationKind.LAMBDA and args.oracle:
        raise _usage("--oracle is not available for --relation lambda; Λ is decided directly.")
    method = ClassMethod.ORACLE if args.oracle else ClassMethod.CHARACTERIZATION
    if kind is RelationKind.LAMBDA:
        related = lambda_related(u, a, b)
    elif kind is RelationKind.LSTAR:
        related = (lstar_oracle if args.oracle else lstar_related)(u, a, b, params)
    else:
        related = (rstar_oracle if args.oracle else rstar_related)(u, a, b, params)
    result = RelationResult(universe=u, relation=kind, method=method, a=a, b=b, related=related)
    print(render_relation(result, params.output_format))
    return _verdict(related)


def cmd_classes(args: argparse.Namespace, params: Params) -> int:
    u = _universe(args)
    method = ClassMethod.ORACLE if args.oracle else ClassMethod.CHARACTERIZATION
    classes = relation_classes(u, RelationKind(args.relation), method, params)
    print(render_classes(classes, params.output_format))
    return EXIT_TRUE


def cmd_abundance(args: argparse.Namespace, params: Params) -> int:
    u = _universe(args)
    verdict = abundance(u, empirical=args.empirical, params=params)
    print(render_abundance(verdict, params.output_format))
    return _verdict(verdict.abundant)


def cmd_enumerate(args: argparse.Namespace, params: Params) -> int:
    u = _universe(args)
    stream: ElementStream
    if args.stratum is not None:
        if args.filter != ElementFilter.ALL.value:
            raise _usage("--stratum cannot be combined with --filter.")
        stream = enumerate_stratum(u, args.stratum)
    else:
        stream = enumerate_filtered(u, ElementFilter(args.filter))
    if args.limit is not None and args.limit < 0:
        raise _usage(f"--limit must be nonnegative, got {args.limit}.")
    limit = params.enumerate_limit if args.limit is None else args.limit
    for line in render_elements(islice(stream, limit), params.output_format):
        print(line)
    logger.debug("enumerate printed %d members of %s", stream.yielded, u)
    return EXIT_TRUE


def cmd_verify(args: argparse.Namespace, params: Params) -> int:
    report = run_suite(args.suite, args.max_n, params)
    print(render_report(report, params.output_format))
    return _verdict(report.overall)


def cmd_witness(args: argparse.Namespace, params: Params) -> int:
    u = _universe(args)
    if is_regular_semigroup(u):
        print(f"T{u} is regular; no non-regular element exists", file=sys.stderr)
        return EXIT_FALSE
    print(render_element(nonregular_witness(u), params.output_format))
    return EXIT_TRUE


def cmd_regular_semigroup(args: argparse.Namespace, params: Params) -> int:
    u = _universe(args)
    verdict = is_regular_semigroup(u)
    print(render_flag("regular", verdict, params.output_format))
    return _verdict(verdict)


def cmd_quasi_inverse(args: argparse.Namespace, params: Params) -> int:
    u = _universe(args)
    a = _map(args.map, u)
    if not is_regular_element(u, a):
        print(f"{a} is not regular in T{u}", file=sys.stderr)
        return EXIT_FALSE
    print(render_element(quasi_inverse(u, a), params.output_format))
    return EXIT_TRUE


def cmd_idempotent(args: argparse.Namespace, params: Params) -> int:
    u = _universe(args)
    parsed = parse_partition(args.kernel, u.n)
    if not parsed.ok:
        raise InputError(parsed.errors)
    e = idempotent_with_kernel(u, parsed.value)
    if e is None:
        print(f"no idempotent of T{u} has kernel {parsed.value}", file=sys.stderr)
        return EXIT_FALSE
    print(render_element(e, params.output_format))
    return EXIT_TRUE


# =============================================================================
# Parser
# =============================================================================

def _add_universe(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", metavar="N", type=int, required=True, help="|X|")
    parser.add_argument("--m", metavar="M", type=int, required=True, help="|Y|, 1 ≤ m ≤ n")
    parser.add_argument("--k", metavar="K", type=int, required=True, help="|Z|, 1 ≤ k ≤ m")


def build_parser() -> argparse.ArgumentParser:
    # accepted before or after the command; the subcommand copy only overrides when given
    options = argparse.ArgumentParser(add_help=False)
    options.add_argument("--format", choices=[f.value for f in OutputFormat], default=argparse.SUPPRESS,
                         help="output format (default: table)")
    options.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], default=argparse.SUPPRESS,
                         help="logging threshold on stderr (default: WARNING)")

    parser = argparse.ArgumentParser(
        prog="restricted-range",
        description="Exact computation in the semigroup T(X,Y,Z) of maps with Yα ⊆ Z.",
        parents=[options],
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    count = commands.add_parser("count", parents=[options], help="exact cardinalities")
    _add_universe(count)
    count.add_argument("--what", required=True, choices=[*_COUNTS, *_STRATIFIED_COUNTS])
    count.add_argument("--r", metavar="R", type=int, help="stratum or rank for the stratified counts")
    count.set_defaults(handler=cmd_count)

    check = commands.add_parser("check", parents=[options], help="membership, regularity or idempotency of a map")
    _add_universe(check)
    check.add_argument("--map", required=True, help="0-based image list, e.g. 0,0,2")
    check.add_argument("--property", required=True, choices=["member", "regular", "idempotent"])
    check.set_defaults(handler=cmd_check)

    related = commands.add_parser("related", parents=[options], help="whether two members are related")
    _add_universe(related)
    related.add_argument("--a", required=True, help="first map literal")
    related.add_argument("--b", required=True, help="second map literal")
    related.add_argument("--relation", required=True, choices=[kind.value for kind in RelationKind])
    related.add_argument("--oracle", action="store_true", help="decide by the brute-force oracle")
    related.set_defaults(handler=cmd_related)

    classes = commands.add_parser("classes", parents=[options], help="partition the semigroup into classes")
    _add_universe(classes)
    classes.add_argument("--relation", required=True, choices=[kind.value for kind in RelationKind])
    classes.add_argument("--oracle", action="store_true", help="group by oracle signatures")
    classes.set_defaults(handler=cmd_classes)

    abundance_ = commands.add_parser("abundance", parents=[options], help="left/right abundance verdict")
    _add_universe(abundance_)
    abundance_.add_argument("--empirical", action="store_true",
                            help="check every class for an idempotent and report a witness class")
    abundance_.set_defaults(handler=cmd_abundance)

    enumerate_ = commands.add_parser("enumerate", parents=[options], help="list members in lexicographic order")
    _add_universe(enumerate_)
    enumerate_.add_argument("--filter", default=ElementFilter.ALL.value, choices=[f.value for f in ElementFilter])
    enumerate_.add_argument("--stratum", metavar="R", type=int, help="only members with |Yα| = R")
    enumerate_.add_argument("--limit", metavar="N", type=int, help="stop after N members (default: 10000)")
    enumerate_.set_defaults(handler=cmd_enumerate)

    verify = commands.add_parser("verify", parents=[options], help="cross-check formulas against brute force")
    verify.add_argument("--suite", default="all", choices=[*SUITES, "all"])
    verify.add_argument("--max-n", metavar="N", type=int, help="largest n verified (default: per suite)")
    verify.add_argument("--workers", metavar="N", type=int, help="universes verified concurrently")
    verify.set_defaults(handler=cmd_verify)

    witness = commands.add_parser("witness", parents=[options], help="a non-regular member")
    _add_universe(witness)
    witness.set_defaults(handler=cmd_witness)

    regular = commands.add_parser("regular-semigroup", parents=[options], help="whether T(X,Y,Z) is regular")
    _add_universe(regular)
    regular.set_defaults(handler=cmd_regular_semigroup)

    inverse = commands.add_parser("quasi-inverse", parents=[options], help="β with αβα = α for a regular map")
    _add_universe(inverse)
    inverse.add_argument("--map", required=True, help="0-based image list, e.g. 0,0,2")
    inverse.set_defaults(handler=cmd_quasi_inverse)

    idempotent = commands.add_parser("idempotent", parents=[options], help="an idempotent with a given kernel")
    _add_universe(idempotent)
    idempotent.add_argument("--kernel", required=True, help="blocks separated by '|', e.g. 0,1|2")
    idempotent.set_defaults(handler=cmd_idempotent)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_TRUE

    try:
        params = Params.from_env(
            output_format=getattr(args, "format", None),
            log_level=getattr(args, "log_level", None),
            workers=getattr(args, "workers", None),
        )
    except ValueError as exc:
        print(f"error: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=params.log_level,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        return args.handler(args, params)
    except InputError as exc:
        print(format_errors(exc.errors), file=sys.stderr)
    except SemigroupError as exc:
        print(format_errors([exc.error]), file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
