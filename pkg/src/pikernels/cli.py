"""Command-line interface.

Exit codes: 0 success, 1 load or computation failure, 2 not pi-separable
(or a violated precondition), 3 an internal consistency check failed.
``verify`` exits 0 exactly when every check passes.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .chartab import CharacterTable, TableError, compute_table, ingest_table
from .groups import named_group
from .kernels import KernelCheckError, counterexample_group, kernel_report
from .normal import LatticeError, PrimeSet, pi_elements
from .partial import (NotSeparableError, PartialCharacterError, brauer_from_table, decomposition_matrix,
                      irreducible_partial_characters)
from .perm import Group, GroupError, load_group
from .verify import bundled_corpus, load_corpus, verify_corpus

log = logging.getLogger("pikernels")

EXIT_FAIL, EXIT_NOT_SEPARABLE, EXIT_CHECK = 1, 2, 3


class CliError(Exception):
    def __init__(self, msg: str, code: int = EXIT_FAIL):
        super().__init__(msg)
        self.code = code


def resolve_group(arg: str) -> Group:
    """A group file path, a bundled corpus file name, or a short group name like ``s3``."""
    path = Path(arg)
    try:
        if path.is_file():
            return load_group(path)
        bundled = bundled_corpus() / path.name
        if bundled.is_file():
            return load_group(bundled)
        return named_group(arg)
    except (GroupError, OSError, ValueError, KeyError) as exc:
        raise CliError(f"cannot load group {arg!r}: {exc}") from exc


def _pi_from_args(args) -> PrimeSet:
    if args.pi is not None and args.p is not None:
        raise CliError("give either --pi or --p, not both", EXIT_NOT_SEPARABLE)
    if args.p is not None:
        return PrimeSet.complement(args.p)
    if args.pi is None:
        raise CliError("a prime set is required (--pi SPEC or --p P)", EXIT_NOT_SEPARABLE)
    try:
        return PrimeSet.parse(args.pi)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_NOT_SEPARABLE) from exc


def _emit(obj, out: str | None) -> None:
    text = json.dumps(obj, indent=1, sort_keys=False) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _table(G: Group) -> CharacterTable:
    try:
        return compute_table(G)
    except TableError as exc:
        raise CliError(f"character table computation failed: {exc}") from exc


def cmd_table(args) -> int:
    G = resolve_group(args.group)
    if args.ingest:
        try:
            table = ingest_table(args.ingest, G)
        except (TableError, OSError) as exc:
            raise CliError(f"cannot ingest {args.ingest}: {exc}") from exc
        _emit(table.to_json(), args.out)
        return 0
    table = _table(G)
    if args.p is not None:
        return _emit_partial(G, table, PrimeSet.complement(args.p), args.out, mode="brauer")
    _emit(table.to_json(), args.out)
    return 0


def _emit_partial(G: Group, table: CharacterTable, pi: PrimeSet, out: str | None, mode: str = "partial") -> int:
    try:
        ipi = irreducible_partial_characters(table, pi)
        dm = decomposition_matrix(table, pi, ipi)
    except NotSeparableError as exc:
        raise CliError(str(exc), EXIT_NOT_SEPARABLE) from exc
    except (PartialCharacterError, LatticeError) as exc:
        raise CliError(str(exc), EXIT_CHECK) from exc
    classes = table.classes
    idx = sorted(pi_elements(G, classes, pi))
    obj = {
        "group": table.name,
        "classes": [{"order": classes[c].order, "size": classes[c].size} for c in idx],
        "mode": mode,
        "pi": pi.spec(),
    }
    if mode == "brauer":
        obj["p"] = pi.complement_of
    obj["class_indices"] = idx
    obj["chars"] = [[v.to_json() for v in phi.values] for phi in ipi]
    obj["decomposition"] = dm.entries
    _emit(obj, out)
    return 0


def cmd_partial(args) -> int:
    G = resolve_group(args.group)
    return _emit_partial(G, _table(G), _pi_from_args(args), args.out)


def cmd_kernels(args) -> int:
    G = resolve_group(args.group)
    table = _table(G)
    if args.ingest:
        try:
            brauer = ingest_table(args.ingest, G)
            phis = brauer_from_table(brauer)
        except (TableError, OSError) as exc:
            raise CliError(f"cannot ingest {args.ingest}: {exc}") from exc
        pi = phis[0].pi
        require_lift = False
    else:
        pi = _pi_from_args(args)
        try:
            phis = irreducible_partial_characters(table, pi)
        except NotSeparableError as exc:
            raise CliError(str(exc), EXIT_NOT_SEPARABLE) from exc
        except PartialCharacterError as exc:
            raise CliError(str(exc), EXIT_CHECK) from exc
        require_lift = True
    try:
        reports = [kernel_report(phi, table, require_lift=require_lift) for phi in phis]
    except (KernelCheckError, PartialCharacterError, LatticeError) as exc:
        raise CliError(str(exc), EXIT_CHECK) from exc
    _emit({"group": table.name, "pi": pi.spec(), "reports": [r.to_json() for r in reports]}, args.out)
    if not all(r.passed for r in reports):
        return EXIT_CHECK
    return 0


def cmd_verify(args) -> int:
    target = Path(args.path) if args.path else bundled_corpus()
    if not target.exists():
        raise CliError(f"no such corpus: {target}")
    menu = None
    if args.pi:
        menu = "all" if args.pi == "all" else args.pi.split(";")
    entries = load_corpus(target, menu)
    report = verify_corpus(entries, jobs=args.jobs, timing=args.timing)
    _emit(report, args.out)
    for e in report["entries"]:
        c = e["counts"]
        log.debug("%-8s pass=%d fail=%d skipped=%d", e["group"], c["pass"], c["fail"], c["skipped"])
    t = report["totals"]
    log.info("%d groups, %d (group, pi) pairs: %d passed, %d failed, %d skipped",
                len(report["entries"]), report["pairs"], t["pass"], t["fail"], t["skipped"])
    return 0 if report["ok"] else EXIT_FAIL


def cmd_counterexample(args) -> int:
    H = resolve_group(args.h)
    try:
        G, pi, res = counterexample_group(args.c_order, H)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_NOT_SEPARABLE) from exc
    except KernelCheckError as exc:
        raise CliError(str(exc), EXIT_CHECK) from exc
    rep = res.report
    obj = {
        "group": G.name,
        "order": G.order,
        "pi": pi.spec(),
        "phi": [str(v) for v in rep.phi.values],
        "L_order": rep.L.order,
        "K_order": rep.K.order,
        "lifts": [{"values": [str(v) for v in chi.values], "kernel_order": M.order,
                   "kernel_equals_K": M == rep.K} for chi, M in rep.lifts],
        "strict_lift_kernel_orders": [M.order for _, M in res.strict_lifts],
        "checks": {c.name: c.passed for c in rep.checks},
    }
    _emit(obj, args.out)
    for _, M in res.strict_lifts:
        log.info("lift with |ker chi| = %d < |K(phi)| = %d", M.order, rep.K.order)
    return 0 if res.strict_lifts and rep.passed else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pikernels", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="ordinary (or, with --p, Brauer) character table as JSON")
    p.add_argument("group")
    p.add_argument("--ingest", metavar="FILE", help="load this table instead of computing one")
    p.add_argument("--p", type=int, help="Brauer characters of a p-solvable group")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("partial", help="irreducible pi-partial characters and decomposition matrix")
    p.add_argument("group")
    p.add_argument("--pi", metavar="SPEC", help="'2,3' or p'5")
    p.add_argument("--p", type=int, help="shorthand for --pi p'P")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_partial)

    p = sub.add_parser("kernels", help="L(phi), K(phi), lifts and checks for every irreducible phi")
    p.add_argument("group")
    p.add_argument("--pi", metavar="SPEC")
    p.add_argument("--p", type=int)
    p.add_argument("--ingest", metavar="FILE", help="use the rows of an ingested Brauer table as phi")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_kernels)

    p = sub.add_parser("verify", help="run every check over a group file or corpus directory")
    p.add_argument("path", nargs="?", help="group file or corpus directory (default: bundled corpus)")
    p.add_argument("--pi", metavar="MENU", help="'all' or ';'-separated prime set specs")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include timings (report is no longer reproducible)")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("counterexample", help="C x H example with a lift kernel strictly inside K(phi)")
    p.add_argument("--c-order", type=int, required=True)
    p.add_argument("--h", required=True, metavar="SPEC", help="group name (c2, v4, c3, ...) or group file")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_counterexample)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except CliError as exc:
        log.error("%s", exc)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
