"""Acceptance criteria, one check each.

Run under pytest (each test prints its PASS/FAIL line) or directly with
``python tests/test_acceptance.py``.
"""

import subprocess
import sys
import time
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pikernels.chartab import check_ordinary, compute_table, kernel_of_character  # noqa: E402
from pikernels.kernels import (check_exists_lift_with_kernel_K, check_lemma_quotient, check_lift_sandwich,  # noqa: E402
                               counterexample_group, intersection_theorem, k_subgroup, largest_normal_coset_constant,
                               largest_normal_constant_on_pi_part)
from pikernels.groups import cyclic, klein  # noqa: E402
from pikernels.normal import PrimeSet, is_pi_separable, o_pi  # noqa: E402
from pikernels.partial import brauer_characters, irreducible_partial_characters  # noqa: E402
from pikernels.verify import pi_menu  # noqa: E402
from conftest import CORPUS_NAMES, corpus_group  # noqa: E402


@lru_cache(maxsize=None)
def tables():
    t0 = time.perf_counter()
    out = {name: compute_table(corpus_group(name)) for name in CORPUS_NAMES}
    return out, time.perf_counter() - t0


@lru_cache(maxsize=None)
def separable_pairs():
    """(name, table, pi, I_pi) for every pi-separable corpus pair."""
    out = []
    for name, T in tables()[0].items():
        G = T.group
        for pi in pi_menu(G):
            if is_pi_separable(G, T.classes, pi)[0]:
                out.append((name, T, pi, irreducible_partial_characters(T, pi)))
    return out


def p_solvable_pairs():
    return [(n, T, pi, ipi) for n, T, pi, ipi in separable_pairs() if pi.complement_of is not None]


def exact_tables():
    ts, seconds = tables()
    for T in ts.values():
        check_ordinary(T)
        assert sum(d * d for d in T.degrees) == T.order
    return seconds < 60, f"{len(ts)} tables exact in {seconds:.2f}s"


def brauer_kernel_characterizations():
    count = 0
    for _, _, _, ibr in p_solvable_pairs():
        for phi in ibr:
            K = k_subgroup(phi)
            if largest_normal_constant_on_pi_part(phi) != K or largest_normal_coset_constant(phi) != K:
                return False, "scan disagrees with formula"
            count += 1
    S = tables()[0]["s3"]
    sign = next(chi for chi in S if chi.degree == 1 and not chi.is_principal)
    ibr3 = brauer_characters(S, 3)
    sign3 = next(phi for phi in ibr3 if not phi.is_principal)
    ok3 = k_subgroup(sign3).order == 3 == kernel_of_character(sign).order
    ibr2 = brauer_characters(S, 2)
    ok2 = sorted(phi.degree for phi in ibr2) == [1, 2]
    return count > 0 and ok3 and ok2, f"{count} Brauer characters; S3 spot values {'ok' if ok3 and ok2 else 'WRONG'}"


def brauer_intersection_is_p_core():
    pairs = p_solvable_pairs()
    for _, T, pi, ibr in pairs:
        inter = frozenset(range(T.order))
        for phi in ibr:
            inter &= k_subgroup(phi).members
        if inter != o_pi(T.group, T.classes, PrimeSet.of(pi.complement_of)).members:
            return False, f"mismatch for {T.name} at p = {pi.complement_of}"
    ts = tables()[0]
    spot = []
    for name, p in [("s3", 3), ("a4", 2)]:
        inter = frozenset(range(ts[name].order))
        for phi in brauer_characters(ts[name], p):
            inter &= k_subgroup(phi).members
        spot.append(len(inter))
    return spot == [3, 4], f"{len(pairs)} (G, p) pairs; S3 p=3 -> {spot[0]}, A4 p=2 -> {spot[1]}"


def _per_phi(check):
    pairs = separable_pairs()
    bad = [(n, str(pi)) for n, T, pi, ipi in pairs for phi in ipi if not check(phi, T).passed]
    return not bad and len(pairs) >= 100, f"{len(pairs)} (G, pi) pairs, {len(bad)} violations"


def lift_kernels_sandwiched():
    return _per_phi(check_lift_sandwich)


def some_lift_attains_k():
    return _per_phi(check_exists_lift_with_kernel_K)


def quotient_core_over_lift_kernels():
    return _per_phi(check_lemma_quotient)


def intersection_is_pi_prime_core():
    pairs = separable_pairs()
    bad = [(n, str(pi)) for n, T, pi, ipi in pairs if not intersection_theorem(T.group, T, pi, ipi).passed]
    return not bad, f"{len(pairs)} (G, pi) pairs, {len(bad)} mismatches"


def direct_product_counterexample():
    details = []
    ok = True
    for c_order, H, want_k, want_lift in [(3, cyclic(2), 2, 1), (5, cyclic(3), 3, 1), (3, klein(), 4, 2)]:
        G, _, res = counterexample_group(c_order, H)
        rep = res.report
        lifts = sorted(M.order for _, M in res.strict_lifts)
        ok &= rep.L.order == 1 and rep.K.order == want_k and want_lift in lifts
        details.append(f"{G.name}: |L|={rep.L.order} |K|={rep.K.order} strict lift kernels {lifts}")
    return ok, "; ".join(details)


def full_verify_run():
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "pikernels", "verify"], capture_output=True, text=True)
    seconds = time.perf_counter() - t0
    return proc.returncode == 0 and seconds < 300, f"exit {proc.returncode} in {seconds:.1f}s; {proc.stderr.strip()}"


CRITERIA = [
    ("exact character tables for the corpus in under 60 s", exact_tables),
    ("Brauer kernel formula agrees with both lattice scans", brauer_kernel_characterizations),
    ("intersection of Brauer kernels is O_p(G)", brauer_intersection_is_p_core),
    ("every lift kernel lies between L and K", lift_kernels_sandwiched),
    ("some lift kernel equals K", some_lift_attains_k),
    ("K is the pi'-core over every lift kernel", quotient_core_over_lift_kernels),
    ("intersection of the K(phi) is O_pi'(G)", intersection_is_pi_prime_core),
    ("direct product family has a lift kernel strictly inside K", direct_product_counterexample),
    ("full verify run exits 0 in under 5 minutes", full_verify_run),
]


def report(label, fn):
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure, reported as such
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    line = f"{'PASS' if ok else 'FAIL'}  {label}  ({detail})"
    return ok, line


@pytest.mark.parametrize("label,fn", CRITERIA, ids=[fn.__name__ for _, fn in CRITERIA])
def test_criterion(label, fn, capsys):
    ok, line = report(label, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [report(label, fn) for label, fn in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
