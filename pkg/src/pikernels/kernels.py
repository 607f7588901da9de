"""Kernels of partial and Brauer characters.

For a pi-partial character phi:

* ``L(phi)`` is generated by the pi-elements g with phi(g) = phi(1);
* ``K(phi)`` is the largest normal subgroup over L(phi) with pi'-index.

``K(phi)`` serves as the kernel of phi everywhere in this module.  Besides
the formula, K(phi) is recovered by two lattice scans that never look at
L(phi), and the lifts of phi are checked against both subgroups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from .chartab import Character, CharacterTable, compute_table, kernel_of_character
from .normal import (NormalSubgroup, PrimeSet, all_normal_subgroups, is_pi_number, largest_normal_over,
                     meet, normal_closure, o_pi, trivial_subgroup, whole_group)
from .partial import PartialCharacter, irreducible_partial_characters, lifts as find_lifts, restrict
from .perm import ConjugacyClasses, Group
from . import groups


class KernelCheckError(AssertionError):
    """Two computations that must agree did not."""


PASS, FAIL, SKIP = "pass", "fail", "skipped"


@dataclass
class CheckOutcome:
    name: str
    status: str
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        return out


def _check(name: str, ok: bool, detail: str = "") -> CheckOutcome:
    return CheckOutcome(name, PASS if ok else FAIL, "" if ok else detail)


def _context(phi: PartialCharacter) -> tuple[Group, ConjugacyClasses]:
    if phi.classes is None:
        raise ValueError("partial character is not attached to a group")
    return phi.classes.group, phi.classes


def _degree_classes(phi: PartialCharacter) -> set[int]:
    deg = phi.values[0]
    return {c for c, v in zip(phi.pi_classes, phi.values) if v == deg}


# -- the two subgroups -----------------------------------------------------

def l_subgroup(phi: PartialCharacter) -> NormalSubgroup:
    G, classes = _context(phi)
    seeds = set()
    for c in _degree_classes(phi):
        seeds |= classes[c].members
    # normal_closure raises unless the generated subgroup is a union of classes
    return normal_closure(G, classes, seeds)


def k_subgroup(phi: PartialCharacter, L: NormalSubgroup | None = None) -> NormalSubgroup:
    G, classes = _context(phi)
    if L is None:
        L = l_subgroup(phi)
    return largest_normal_over(G, classes, L, phi.pi.prime_complement(G))


def largest_normal_constant_on_pi_part(phi: PartialCharacter) -> NormalSubgroup:
    """Largest normal N with phi(x) = phi(1) for every pi-element x of N."""
    G, classes = _context(phi)
    good = _degree_classes(phi)
    pic = set(phi.pi_classes)
    cands = [N for N in all_normal_subgroups(G, classes) if (N.class_indices & pic) <= good]
    return _unique_max(cands, "constant-on-pi-part")


def largest_normal_coset_constant(phi: PartialCharacter) -> NormalSubgroup:
    """Largest normal N such that phi agrees on pi-elements lying in a common coset of N."""
    G, classes = _context(phi)
    value = phi.as_dict()
    pi_members = [x for c in phi.pi_classes for x in classes[c].members]
    cands = []
    for N in all_normal_subgroups(G, classes):
        seen: dict[int, object] = {}
        ok = True
        for x in pi_members:
            label = min(G.mul(n, x) for n in N.members)
            v = value[classes.class_of[x]]
            if seen.setdefault(label, v) != v:
                ok = False
                break
        if ok:
            cands.append(N)
    return _unique_max(cands, "coset-constant")


def _unique_max(cands: Sequence[NormalSubgroup], what: str) -> NormalSubgroup:
    if not cands:
        raise KernelCheckError(f"no normal subgroup is {what}")
    top = max(cands, key=lambda N: N.order)
    if not all(N <= top for N in cands):
        raise KernelCheckError(f"no unique largest {what} normal subgroup")
    return top


def brauer_kernel(phi: PartialCharacter) -> NormalSubgroup:
    """Kernel of a Brauer character phi given on the p-regular classes.

    The formula value is cross-checked against the constant-on-p-regular-part
    lattice scan; a mismatch means the implementation is wrong.
    """
    G, _ = _context(phi)
    if len(phi.pi.prime_complement(G).resolve(G)) > 1:
        raise ValueError("Brauer kernels need pi to be the complement of a single prime")
    K = k_subgroup(phi)
    scan = largest_normal_constant_on_pi_part(phi)
    if K != scan:
        raise KernelCheckError(f"formula kernel {K} differs from the lattice scan {scan}")
    return K


# -- checks ----------------------------------------------------------------

LiftKernels = list[tuple[Character, NormalSubgroup]]


def _lift_kernels(phi: PartialCharacter, table: CharacterTable, *, require: bool = True) -> LiftKernels:
    return [(chi, kernel_of_character(chi)) for chi in find_lifts(phi, table, check=require)]


def check_lift_sandwich(phi: PartialCharacter, table: CharacterTable, L: NormalSubgroup | None = None,
                        K: NormalSubgroup | None = None, lift_kernels: LiftKernels | None = None) -> CheckOutcome:
    L = L if L is not None else l_subgroup(phi)
    K = K if K is not None else k_subgroup(phi, L)
    if lift_kernels is None:
        lift_kernels = _lift_kernels(phi, table)
    bad = [M.order for _, M in lift_kernels if not (L <= M <= K)]
    return _check("lift_kernel_between_L_and_K", not bad,
                  f"lift kernels of orders {bad} escape [{L.order}, {K.order}]")


def check_exists_lift_with_kernel_K(phi: PartialCharacter, table: CharacterTable, K: NormalSubgroup | None = None,
                                    lift_kernels: LiftKernels | None = None) -> CheckOutcome:
    K = K if K is not None else k_subgroup(phi)
    if lift_kernels is None:
        lift_kernels = _lift_kernels(phi, table)
    kernels = [M for _, M in lift_kernels]
    return _check("some_lift_kernel_equals_K", any(M == K for M in kernels),
                  f"lift kernel orders {[M.order for M in kernels]}, |K| = {K.order}")


def check_lemma_quotient(phi: PartialCharacter, table: CharacterTable, K: NormalSubgroup | None = None,
                         lift_kernels: LiftKernels | None = None) -> CheckOutcome:
    """For each lift kernel M: M <= K and K is the largest normal subgroup over M with pi'-index."""
    G, classes = _context(phi)
    K = K if K is not None else k_subgroup(phi)
    if lift_kernels is None:
        lift_kernels = _lift_kernels(phi, table)
    pip = phi.pi.prime_complement(G)
    bad = []
    for _, M in lift_kernels:
        if not M <= K or largest_normal_over(G, classes, M, pip) != K:
            bad.append(M.order)
    return _check("K_is_pi_prime_core_over_lift_kernel", not bad, f"fails for lift kernels of orders {bad}")


def intersection_theorem(G: Group, table: CharacterTable, pi: PrimeSet,
                         irreducible: Sequence[PartialCharacter] | None = None) -> CheckOutcome:
    """Intersection of K(phi) over the irreducible pi-partial characters equals O_pi'(G)."""
    classes = table.classes if table.classes is not None else G.classes
    if irreducible is None:
        irreducible = irreducible_partial_characters(table, pi)
    inter = whole_group(classes)
    for phi in irreducible:
        inter = meet(inter, k_subgroup(phi))
    core = o_pi(G, classes, pi.prime_complement(G))
    return _check("intersection_of_kernels_is_pi_prime_core", inter == core,
                  f"intersection has order {inter.order}, O_pi'(G) has order {core.order}")


# -- reports ---------------------------------------------------------------

@dataclass
class KernelReport:
    phi: PartialCharacter
    L: NormalSubgroup
    K: NormalSubgroup
    lifts: LiftKernels
    checks: list[CheckOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def to_json(self) -> dict:
        return {
            "values": [v.to_json() for v in self.phi.values],
            "pi_classes": list(self.phi.pi_classes),
            "degree": self.phi.degree,
            "L_order": self.L.order,
            "K_order": self.K.order,
            "L_classes": self.L.sorted_classes(),
            "K_classes": self.K.sorted_classes(),
            "lifts": [{"values": [v.to_json() for v in chi.values], "kernel_order": M.order,
                       "kernel_classes": M.sorted_classes()} for chi, M in self.lifts],
            "checks": {c.name: c.passed for c in self.checks},
        }


def kernel_report(phi: PartialCharacter, table: CharacterTable | None, *, scans: bool = True,
                  require_lift: bool = True) -> KernelReport:
    """L, K, lifts and every per-character check for one partial character.

    ``table`` may be None (ingested Brauer characters without an ordinary
    table); then only the lattice characterizations are checked.
    """
    G, classes = _context(phi)
    L = l_subgroup(phi)
    K = k_subgroup(phi, L)
    pip = phi.pi.prime_complement(G)
    checks = [
        _check("L_le_K", L <= K, f"|L| = {L.order}, |K| = {K.order}"),
        _check("K_over_L_is_pi_prime", is_pi_number(K.order // L.order, pip.resolve(G)),
               f"|K:L| = {K.order // L.order}"),
        _check("pi_part_of_K_inside_L",
               all(x in L for c in K.class_indices if c in set(phi.pi_classes) for x in classes[c].members),
               "K has pi-elements outside L"),
    ]
    if scans:
        scan4 = largest_normal_constant_on_pi_part(phi)
        scan5 = largest_normal_coset_constant(phi)
        checks.append(_check("K_equals_constant_on_pi_part_scan", scan4 == K,
                             f"scan gives order {scan4.order}, formula {K.order}"))
        checks.append(_check("K_equals_coset_constant_scan", scan5 == K,
                             f"scan gives order {scan5.order}, formula {K.order}"))
    lift_list: LiftKernels = []
    if table is not None:
        lift_list = _lift_kernels(phi, table, require=require_lift)
        checks.append(check_lift_sandwich(phi, table, L, K, lift_list))
        if require_lift:
            checks.append(check_exists_lift_with_kernel_K(phi, table, K, lift_list))
            checks.append(check_lemma_quotient(phi, table, K, lift_list))
    return KernelReport(phi, L, K, lift_list, checks)


# -- the direct product family -------------------------------------------

@dataclass
class CounterexampleReport:
    group: Group
    pi: PrimeSet
    report: KernelReport
    strict_lifts: list[tuple[Character, NormalSubgroup]]
    h_kernels: list[NormalSubgroup]


def counterexample_group(c_order: int, h: Group) -> tuple[Group, PrimeSet, CounterexampleReport]:
    """G = C x H with C cyclic of pi-order and H a nontrivial pi'-group.

    phi is the restriction of alpha x 1_H with alpha faithful on C.  Then
    L(phi) = 1, K(phi) = H, and every lift alpha x theta with theta
    nonprincipal linear has kernel ker(theta), strictly inside H.
    """
    if c_order < 2:
        raise ValueError("C must be nontrivial")
    if h.order < 2:
        raise ValueError("H must be nontrivial")
    if gcd(c_order, h.order) != 1:
        raise ValueError(f"|C| = {c_order} and |H| = {h.order} are not coprime")
    C = groups.cyclic(c_order)
    G = groups.direct_product(C, h, name=f"c{c_order}x{h.name or 'h'}")
    classes = G.classes
    pi = PrimeSet(frozenset(G.prime_divisors) - frozenset(h.prime_divisors))
    table = compute_table(G)
    m = C.degree

    def on_c(x: int) -> bool:
        return all(G.elements[x][i] == i for i in range(m, G.degree))

    def on_h(x: int) -> bool:
        return all(G.elements[x][i] == i for i in range(m))

    gen_c = G.id_of(tuple(C.generators[0].images) + tuple(range(m, G.degree)))
    c_classes = {classes.class_of[x] for x in range(G.order) if on_c(x)}
    h_members = frozenset(x for x in range(G.order) if on_h(x))
    H = normal_closure(G, classes, h_members)
    one = trivial_subgroup(classes)

    def alpha_faithful(chi: Character) -> bool:
        v = chi.values[classes.class_of[gen_c]]
        return chi.degree == 1 and all(v ** k != 1 for k in range(1, c_order))

    def trivial_on_h(chi: Character) -> bool:
        return all(chi.values[classes.class_of[x]] == chi.degree for x in h_members)

    alpha_x_1 = next(chi for chi in table if alpha_faithful(chi) and trivial_on_h(chi))
    phi = restrict(alpha_x_1, pi, classes)
    if set(phi.pi_classes) != c_classes:
        raise KernelCheckError("pi-elements of C x H are not the elements of C")
    report = kernel_report(phi, table)
    if report.L != one or report.K != H:
        raise KernelCheckError(f"expected |L| = 1 and K = H, got |L| = {report.L.order}, |K| = {report.K.order}")
    strict = []
    h_kernels = []
    for chi, M in report.lifts:
        # kernel of theta, read off the H-elements
        ker_theta = frozenset(x for x in h_members if chi.values[classes.class_of[x]] == chi.degree)
        if ker_theta != M.members:
            raise KernelCheckError("lift kernel differs from the kernel of its H-component")
        h_kernels.append(M)
        if M < report.K:
            strict.append((chi, M))
    return G, pi, CounterexampleReport(G, pi, report, strict, h_kernels)

