"""
Command line entry point: `stacksort-roots {sort,table,certify,identities,conjecture}`.

Reports are written to stdout in the selected format, logs go to stderr. The exit code follows the
report status: 0 ok, 1 violation, 2 usage error.
"""
import argparse
import asyncio
import logging
import sys
from typing import List, Optional

from stacksort_roots.combinatorics.descents import table_closed_form, w2_row_total_external
from stacksort_roots.combinatorics.stacksort import Word, stack_sort_iterates
from stacksort_roots.dispatch import certify_job, identity_job
from stacksort_roots.logger import set_log_level, verbosity_to_level
from stacksort_roots.manager import TabulationManager
from stacksort_roots.model.constants import DEFAULT_CONJECTURE_MAX_N
from stacksort_roots.model.enums import CertifyTarget, IdentityName, OutputFormat, TableMethod, get_or_parse
from stacksort_roots.model.exception import (EnumerationLimitError, InvalidWordError, OutOfRangeError,
                                             ParameterError, UnsupportedClosedFormError, UsageError)
from stacksort_roots.model.report import RunReport
from stacksort_roots.model.table import DescentTable
from stacksort_roots.utilities.conversion import parse_int_range, parse_rational_list, rational_to_str
from stacksort_roots.utilities.exact import catalan

_LOGGER = logging.getLogger(__name__)

# Domain errors caused by the arguments rather than by a failed check
_USAGE_ERRORS = (UsageError, InvalidWordError, EnumerationLimitError, UnsupportedClosedFormError,
                 OutOfRangeError, ParameterError)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="stacksort-roots",
                             description="Descent tables of t-stack sortable permutations and exact "
                                         "real-rootedness certificates of their descent polynomials.")
    parser.add_argument("--format", default=OutputFormat.JSON.value, choices=[f.value for f in OutputFormat])
    parser.add_argument("--jobs", type=int, default=None, help="worker processes (default: CPU count)")
    parser.add_argument("--max-n", type=int, default=None, help="enumeration cap (default: $STACKSORT_MAX_N or 12)")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    sort = sub.add_parser("sort", help="apply the stack-sorting operator repeatedly")
    sort.add_argument("--word", required=True, help='space separated letters, e.g. "2 3 1"')
    sort.add_argument("--times", type=int, default=1)

    table = sub.add_parser("table", help="W_t(n, k) by brute force and/or closed form")
    table.add_argument("--n", type=int, required=True)
    table.add_argument("--t", type=int, required=True)
    table.add_argument("--method", default=TableMethod.BRUTE.value, choices=[m.value for m in TableMethod])

    cert = sub.add_parser("certify", help="real-rootedness certificates over a range of n")
    cert.add_argument("--target", required=True, choices=[t.value for t in CertifyTarget])
    cert.add_argument("--n", required=True, help='range such as "1..20" or "3,5,8"')
    cert.add_argument("--r", default="0,1/2,1,2,7/3", help="r grid for lemma2-zeros")

    ident = sub.add_parser("identities", help="coefficientwise identity checks over a parameter grid")
    ident.add_argument("--which", required=True, choices=[i.value for i in IdentityName])
    ident.add_argument("--n", required=True, help='range such as "1..20"')
    ident.add_argument("--r", default="1/2,1,2,7/3", help="r grid for lemma2")
    ident.add_argument("--alpha", default="1", help="alpha grid for jacobi-eq2")
    ident.add_argument("--beta", default="1", help="beta grid for jacobi-eq2")

    conj = sub.add_parser("conjecture", help="certify W_{n,t}(x) for all n <= n-max and t < n")
    conj.add_argument("--n-max", type=int, default=DEFAULT_CONJECTURE_MAX_N)
    return parser


def cmd_sort(args) -> RunReport:
    if args.times < 0:
        raise UsageError(f"--times must be nonnegative, got {args.times}")
    word = Word.parse(args.word)
    report = RunReport("sort", {"word": str(word), "times": args.times})
    for i, w in enumerate(stack_sort_iterates(word, args.times), start=1):
        report.add_result({"step": i, "word": str(w)})
    return report


def _table_entry(table: DescentTable) -> dict:
    entry = table.to_dict()
    entry["total"] = table.total
    entry["symmetric"] = table.is_symmetric()
    entry["unimodal"] = table.is_unimodal()
    entry["log_concave"] = table.is_log_concave()
    return entry


def _table_passed(table: DescentTable, entry: dict) -> bool:
    n, t = table.n, table.t
    passed = True
    if t == 1:
        entry["catalan_total"] = catalan(n)
        passed = table.total == entry["catalan_total"]
    elif t == 2:
        entry["external_total"] = w2_row_total_external(n)
        passed = table.total == entry["external_total"]
    # Real-rootedness with nonnegative coefficients is proven for these rows, so their shape is asserted
    if t in (1, 2) or t >= n - 1:
        passed = passed and table.is_unimodal() and table.is_log_concave()
    return passed


async def cmd_table(args, manager: TabulationManager) -> RunReport:
    if args.n < 1 or args.t < 1:
        raise UsageError(f"--n and --t must be positive, got n = {args.n}, t = {args.t}")
    method = get_or_parse(TableMethod, args.method)
    report = RunReport("table", {"n": args.n, "t": args.t, "method": method.value})
    tables = []
    if method in (TableMethod.CLOSED, TableMethod.BOTH):
        tables.append(table_closed_form(args.n, args.t, manager.max_n))
    if method in (TableMethod.BRUTE, TableMethod.BOTH):
        tables.append(await manager.async_table_brute_force(args.n, args.t))
    for table in tables:
        entry = _table_entry(table)
        report.add_result(entry, _table_passed(table, entry))
    if method == TableMethod.BOTH:
        match = tables[0].same_counts(tables[1])
        if not match:
            _LOGGER.warning(f"Brute force and closed form disagree: {tables[1]} vs {tables[0]}")
        report.add_result({"match": match}, match)
    return report


# Identities that are meaningful from n = 0 on
_IDENTITY_MIN_N = {
    IdentityName.JACOBI_EQ2: 0,
    IdentityName.NARAYANA_JACOBI: 0,
    IdentityName.NARAYANA_HYPERGEOMETRIC: 0
}


def _check_grid(ns: List[int], min_n: int, rs: List) -> None:
    if min(ns) < min_n:
        raise UsageError(f"--n values must be at least {min_n}, got {min(ns)}")
    if any(r < 0 for r in rs):
        raise UsageError(f"--r values must be nonnegative, got {[rational_to_str(r) for r in rs]}")


async def cmd_certify(args, manager: TabulationManager) -> RunReport:
    target = get_or_parse(CertifyTarget, args.target)
    ns = parse_int_range(args.n)
    rs = parse_rational_list(args.r)
    _check_grid(ns, 1, rs)
    parameters = {"target": target.value, "n": ns}
    if target == CertifyTarget.LEMMA2_ZEROS:
        parameters["r"] = [rational_to_str(r) for r in rs]
    report = RunReport("certify", parameters)
    handler, params = certify_job(target, ns, rs)
    for entry in await manager.async_map(handler, params):
        report.add_result(entry, entry["passed"])
    return report


async def cmd_identities(args, manager: TabulationManager) -> RunReport:
    which = get_or_parse(IdentityName, args.which)
    ns = parse_int_range(args.n)
    rs, alphas, betas = parse_rational_list(args.r), parse_rational_list(args.alpha), parse_rational_list(args.beta)
    _check_grid(ns, _IDENTITY_MIN_N.get(which, 1), rs)
    parameters = {"which": which.value, "n": ns}
    if which == IdentityName.LEMMA2:
        parameters["r"] = [rational_to_str(r) for r in rs]
    elif which == IdentityName.JACOBI_EQ2:
        parameters["alpha"] = [rational_to_str(a) for a in alphas]
        parameters["beta"] = [rational_to_str(b) for b in betas]
    report = RunReport("identities", parameters)
    handler, params = identity_job(which, ns, rs, alphas, betas)
    for entry in await manager.async_map(handler, params):
        report.add_result(entry, entry["passed"])
    return report


async def cmd_conjecture(args, manager: TabulationManager) -> RunReport:
    report = RunReport("conjecture", {"n_max": args.n_max})
    entries = await manager.async_conjecture_scan(args.n_max)
    counterexamples = []
    for e in entries:
        report.add_result(e.to_dict())
        if not e.real_rooted:
            counterexamples.append({"n": e.n, "t": e.t})
    # Counterexamples are data, they do not turn the status into a violation
    report.add_result({"scanned": len(entries), "counterexamples": counterexamples})
    return report


async def _run(args) -> RunReport:
    if args.jobs is not None and args.jobs < 1:
        raise UsageError(f"--jobs must be positive, got {args.jobs}")
    if args.command == "sort":
        return cmd_sort(args)
    async with TabulationManager(max_n=args.max_n, jobs=args.jobs) as manager:
        if args.command == "table":
            return await cmd_table(args, manager)
        elif args.command == "certify":
            return await cmd_certify(args, manager)
        elif args.command == "identities":
            return await cmd_identities(args, manager)
        return await cmd_conjecture(args, manager)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    fmt = OutputFormat.JSON
    command = "unknown"
    try:
        args = parser.parse_args(argv)
        fmt = get_or_parse(OutputFormat, args.format)
        command = args.command
        level = verbosity_to_level(args.verbose)
        set_log_level(root=level, enumeration=level, certification=level)
        report = asyncio.run(_run(args))
    except _USAGE_ERRORS as e:
        _LOGGER.error(f"Usage error: {e}")
        report = RunReport(command)
        report.mark_usage_error(str(e))
    sys.stdout.write(report.render(fmt))
    sys.stdout.flush()
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
