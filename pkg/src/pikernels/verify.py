"""Corpus-wide verification of the kernel results.

A corpus is a directory of group files (``*.json``) with optional ingested
tables (``*.table.json``) referenced from a group file's ``"tables"`` list.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .chartab import CharacterTable, TableError, check_ordinary, compute_table, ingest_table
from .kernels import (FAIL, PASS, SKIP, CheckOutcome, KernelCheckError, brauer_kernel, intersection_theorem,
                      kernel_report)
from .normal import PrimeSet, is_pi_separable, meet, o_pi, whole_group
from .partial import (PartialCharacterError, brauer_from_table, check_brauer_against, decomposition_matrix,
                      irreducible_partial_characters, restrict)
from .perm import Group, GroupError, load_group

def bundled_corpus() -> Path:
    return Path(str(resources.files("pikernels") / "data" / "corpus"))


@dataclass
class CorpusEntry:
    name: str
    group_file: Path
    tables: list[Path] = field(default_factory=list)
    pi_menu: str | list[str] = "all"

    def load(self) -> Group:
        return load_group(self.group_file)

    def menu(self, G: Group) -> list[PrimeSet]:
        return pi_menu(G, self.pi_menu)


def pi_menu(G: Group, menu: str | list[str] = "all") -> list[PrimeSet]:
    """Every subset of the primes dividing |G|, then every complement-of-{p}."""
    if menu != "all":
        specs = [menu] if isinstance(menu, str) else menu
        return [PrimeSet.parse(s) for s in specs]
    primes = G.prime_divisors
    out = [PrimeSet(frozenset(c)) for k in range(len(primes) + 1) for c in itertools.combinations(primes, k)]
    out += [PrimeSet.complement(p) for p in primes]
    return out


def load_corpus(path: str | Path, menu: str | list[str] | None = None) -> list[CorpusEntry]:
    path = Path(path)
    files = [path] if path.is_file() else sorted(p for p in path.glob("*.json") if not p.name.endswith(".table.json"))
    entries = []
    for f in files:
        with open(f) as fh:
            obj = json.load(fh)
        name = obj.get("name") or f.stem
        tables = [f.parent / t for t in obj.get("tables", [])]
        entries.append(CorpusEntry(name, f, tables, menu if menu is not None else obj.get("pi_menu", "all")))
    entries.sort(key=lambda e: e.name)
    return entries


def _outcome_list(checks: list[CheckOutcome]) -> list[dict]:
    return [c.to_json() for c in checks]


def _count(checks: list[CheckOutcome]) -> dict[str, int]:
    return {s: sum(c.status == s for c in checks) for s in (PASS, FAIL, SKIP)}


def verify_pair(G: Group, table: CharacterTable, pi: PrimeSet) -> dict:
    """All checks for one (group, pi); a failed check falsifies the implementation."""
    classes = table.classes
    sep, series = is_pi_separable(G, classes, pi)
    out: dict = {"pi": pi.spec(), "primes": sorted(pi.resolve(G)), "separable": sep,
                 "series_orders": [T.order for T in series], "irr": len(table)}
    checks: list[CheckOutcome] = []
    if not sep:
        reason = f"not {pi.complement_of}-solvable" if pi.complement_of else f"not {pi}-separable"
        checks.append(CheckOutcome("kernel_checks", SKIP, reason))
        out.update(ipi=None, kernels=[], checks=_outcome_list(checks), counts=_count(checks))
        return out
    try:
        ipi = irreducible_partial_characters(table, pi)
        checks.append(CheckOutcome("irreducible_count_equals_pi_classes", PASS))
        dm = decomposition_matrix(table, pi, ipi)
        checks.append(CheckOutcome("decomposition_matrix_nonnegative_integral",
                                   PASS if all(s >= 1 for s in dm.column_sums()) else FAIL))
    except (PartialCharacterError, TableError) as exc:
        checks.append(CheckOutcome("irreducible_partial_characters", FAIL, str(exc)))
        out.update(ipi=None, kernels=[], checks=_outcome_list(checks), counts=_count(checks))
        return out
    reports = []
    for phi in ipi:
        try:
            rep = kernel_report(phi, table)
        except (KernelCheckError, PartialCharacterError) as exc:
            checks.append(CheckOutcome("kernel_report", FAIL, str(exc)))
            continue
        reports.append(rep)
        for c in rep.checks:
            checks.append(c)
    # the sandwich holds for any restriction, irreducible or not
    irreducible = {phi.values for phi in ipi}
    reducible = {}
    for chi in table:
        phi = restrict(chi, pi, classes)
        if phi.values not in irreducible:
            reducible.setdefault(phi.values, phi)
    for phi in reducible.values():
        rep = kernel_report(phi, table, scans=False, require_lift=False)
        checks.extend(CheckOutcome("reducible:" + c.name, c.status, c.detail) for c in rep.checks)
    checks.append(intersection_theorem(G, table, pi, ipi))
    if pi.complement_of is not None:
        p = pi.complement_of
        try:
            ks = [brauer_kernel(phi) for phi in ipi]
            inter = whole_group(classes)
            for K in ks:
                inter = meet(inter, K)
            core = o_pi(G, classes, PrimeSet.of(p))
            checks.append(CheckOutcome("brauer_kernel_intersection_is_p_core", PASS if inter == core else FAIL,
                                       f"|intersection| = {inter.order}, |O_p| = {core.order}"))
        except KernelCheckError as exc:
            checks.append(CheckOutcome("brauer_kernel", FAIL, str(exc)))
    out.update(ipi=len(ipi), kernels=[r.to_json() for r in reports], checks=_outcome_list(checks),
               counts=_count(checks))
    return out


def verify_brauer_table(G: Group, ordinary: CharacterTable, brauer: CharacterTable) -> dict:
    """Checks available for an ingested Brauer table: characterizations and the p-core intersection."""
    classes = ordinary.classes
    checks: list[CheckOutcome] = []
    try:
        check_brauer_against(ordinary, brauer)
        checks.append(CheckOutcome("ordinary_restrictions_decompose", PASS))
    except (PartialCharacterError, TableError) as exc:
        checks.append(CheckOutcome("ordinary_restrictions_decompose", FAIL, str(exc)))
    ibr = brauer_from_table(brauer)
    reports = []
    inter = whole_group(classes)
    for phi in ibr:
        rep = kernel_report(phi, ordinary, require_lift=False)
        reports.append(rep)
        checks.extend(rep.checks)
        inter = meet(inter, rep.K)
    core = o_pi(G, classes, PrimeSet.of(brauer.p))
    checks.append(CheckOutcome("brauer_kernel_intersection_is_p_core", PASS if inter == core else FAIL,
                               f"|intersection| = {inter.order}, |O_p| = {core.order}"))
    return {"p": brauer.p, "ibr": len(ibr), "kernels": [r.to_json() for r in reports],
            "checks": _outcome_list(checks), "counts": _count(checks)}


def verify_entry(entry: CorpusEntry, timing: bool = False) -> dict:
    t0 = time.perf_counter()
    out: dict = {"group": entry.name}
    try:
        G = entry.load()
    except (GroupError, OSError, ValueError) as exc:
        out.update(error=f"load failed: {exc}", counts={PASS: 0, FAIL: 1, SKIP: 0})
        return out
    out["order"] = G.order
    table_checks: list[CheckOutcome] = []
    try:
        table = compute_table(G)
        check_ordinary(table)
        table_checks.append(CheckOutcome("orthogonality_and_degrees", PASS))
    except TableError as exc:
        table_checks.append(CheckOutcome("orthogonality_and_degrees", FAIL, str(exc)))
        out.update(table_checks=_outcome_list(table_checks), pairs=[], counts=_count(table_checks))
        return out
    ingested = []
    for path in entry.tables:
        try:
            ext = ingest_table(path, G)
        except (TableError, OSError) as exc:
            table_checks.append(CheckOutcome(f"ingest:{path.name}", FAIL, str(exc)))
            continue
        table_checks.append(CheckOutcome(f"ingest:{path.name}", PASS))
        if ext.mode == "brauer":
            ingested.append(verify_brauer_table(G, table, ext))
        elif ext.degrees != table.degrees:
            table_checks.append(CheckOutcome(f"ingest:{path.name}:degrees", FAIL, "degrees differ from computed"))
    pairs = [verify_pair(G, table, pi) for pi in entry.menu(G)]
    all_checks = list(table_checks)
    counts = _count(table_checks)
    for block in pairs + ingested:
        for k, v in block["counts"].items():
            counts[k] += v
    out.update(degrees=table.degrees, table_checks=_outcome_list(all_checks), pairs=pairs, brauer_tables=ingested,
               counts=counts)
    if timing:
        out["seconds"] = round(time.perf_counter() - t0, 3)
    return out


def _run(args: tuple[CorpusEntry, bool]) -> dict:
    return verify_entry(*args)


def verify_corpus(entries: list[CorpusEntry], jobs: int = 1, timing: bool = False) -> dict:
    t0 = time.perf_counter()
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run, [(e, timing) for e in entries]))
    else:
        results = [verify_entry(e, timing) for e in entries]
    results.sort(key=lambda r: r["group"])
    totals = {PASS: 0, FAIL: 0, SKIP: 0}
    for r in results:
        for k, v in r["counts"].items():
            totals[k] += v
    report = {"entries": results, "totals": totals,
              "pairs": sum(len(r.get("pairs", [])) for r in results),
              "ok": totals[FAIL] == 0}
    if timing:
        report["seconds"] = round(time.perf_counter() - t0, 3)
    return report
