"""Normal subgroups, pi-elements and the pi-core operators.

Quotients are never built.  A statement about ``N/L`` is handled inside the
lattice of normal subgroups of G: ``N/L`` is a pi-group exactly when the
index ``|N:L|`` is a pi-number.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .perm import ConjugacyClasses, Group, prime_factors

DEFAULT_CLASS_BOUND = 24


class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class PrimeSet:
    """A set of primes, given explicitly or as the complement of one prime.

    The complement form is resolved against the primes dividing |G| when a
    group is at hand (``resolve``).
    """

    primes: frozenset[int] = frozenset()
    complement_of: int | None = None

    @classmethod
    def of(cls, *primes: int) -> PrimeSet:
        return cls(frozenset(primes))

    @classmethod
    def complement(cls, p: int) -> PrimeSet:
        return cls(frozenset(), p)

    @classmethod
    def parse(cls, spec: str) -> PrimeSet:
        """Parse ``"2,3"``, ``"p'5"`` or an empty set (``""`` / ``"{}"``)."""
        s = spec.strip().replace(" ", "")
        if s.startswith("p'"):
            p = _parse_prime(s[2:], spec)
            return cls.complement(p)
        s = s.strip("{}")
        if not s:
            return cls()
        return cls(frozenset(_parse_prime(t, spec) for t in s.split(",")))

    def resolve(self, G: Group) -> frozenset[int]:
        if self.complement_of is None:
            return self.primes
        return frozenset(p for p in G.prime_divisors if p != self.complement_of)

    def prime_complement(self, G: Group) -> PrimeSet:
        """pi' relative to the primes dividing |G|."""
        mine = self.resolve(G)
        return PrimeSet(frozenset(p for p in G.prime_divisors if p not in mine))

    def spec(self) -> str:
        if self.complement_of is not None:
            return f"p'{self.complement_of}"
        return ",".join(map(str, sorted(self.primes))) or "{}"

    def __str__(self) -> str:
        if self.complement_of is not None:
            return f"{{{self.complement_of}}}'"
        return "{" + ",".join(map(str, sorted(self.primes))) + "}"


def _parse_prime(tok: str, spec: str) -> int:
    try:
        p = int(tok)
    except ValueError:
        raise ValueError(f"bad prime set specification {spec!r}") from None
    if p < 2 or prime_factors(p) != [p]:
        raise ValueError(f"{p} is not a prime in {spec!r}")
    return p


def is_pi_number(n: int, primes: Iterable[int]) -> bool:
    primes = set(primes)
    return all(p in primes for p in prime_factors(n))


@dataclass(frozen=True)
class NormalSubgroup:
    members: frozenset[int]
    class_indices: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.members)

    def __le__(self, other: NormalSubgroup) -> bool:
        return self.members <= other.members

    def __lt__(self, other: NormalSubgroup) -> bool:
        return self.members < other.members

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def index_in(self, other: NormalSubgroup) -> int:
        return other.order // self.order

    def sorted_classes(self) -> list[int]:
        return sorted(self.class_indices)

    def __repr__(self) -> str:
        return f"NormalSubgroup(order={self.order}, classes={self.sorted_classes()})"


def _from_classes(classes: ConjugacyClasses, idx: Iterable[int]) -> NormalSubgroup:
    idx = frozenset(idx)
    members = frozenset().union(*(classes[c].members for c in idx)) if idx else frozenset()
    return NormalSubgroup(members, idx)


def _from_members(classes: ConjugacyClasses, members: Iterable[int]) -> NormalSubgroup:
    members = frozenset(members)
    idx = frozenset(classes.class_of[x] for x in members)
    if sum(classes[c].size for c in idx) != len(members):
        raise LatticeError("subgroup is not a union of conjugacy classes")
    return NormalSubgroup(members, idx)


def trivial_subgroup(classes: ConjugacyClasses) -> NormalSubgroup:
    return _from_classes(classes, [0])


def whole_group(classes: ConjugacyClasses) -> NormalSubgroup:
    return _from_classes(classes, range(len(classes)))


def generated_subgroup(G: Group, gens: Iterable[int]) -> frozenset[int]:
    gens = sorted(set(gens) - {0})
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = G.mul(x, s)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def pi_elements(G: Group, classes: ConjugacyClasses, pi: PrimeSet) -> frozenset[int]:
    """Indices of classes whose elements are pi-elements."""
    primes = pi.resolve(G)
    return frozenset(i for i, c in enumerate(classes) if is_pi_number(c.order, primes))


def normal_closure(G: Group, classes: ConjugacyClasses, seed: Iterable[int]) -> NormalSubgroup:
    seed = set(seed)
    for x in seed:
        if not 0 <= x < G.order:
            raise ValueError(f"invalid element id {x}")
    idx = {classes.class_of[x] for x in seed}
    gens = set().union(*(classes[c].members for c in idx)) if idx else set()
    members = generated_subgroup(G, gens)
    # generated by a class-closed set, so already normal
    return _from_members(classes, members)


def join(G: Group, classes: ConjugacyClasses, *subgroups: NormalSubgroup) -> NormalSubgroup:
    gens = set()
    for N in subgroups:
        gens |= N.members
    return normal_closure(G, classes, gens)


def meet(*subgroups: NormalSubgroup) -> NormalSubgroup:
    members = frozenset.intersection(*(N.members for N in subgroups))
    idx = frozenset.intersection(*(N.class_indices for N in subgroups))
    return NormalSubgroup(members, idx)


def _is_closed(G: Group, classes: ConjugacyClasses, idx: frozenset[int], members: frozenset[int]) -> bool:
    # for a class-closed set it suffices to multiply class representatives into the set
    for c in idx:
        r = classes[c].rep
        for y in members:
            if G.mul(r, y) not in members:
                return False
    return True


def all_normal_subgroups(G: Group, classes: ConjugacyClasses, *,
                         class_bound: int = DEFAULT_CLASS_BOUND) -> list[NormalSubgroup]:
    """Every normal subgroup, by searching unions of classes.

    Candidates contain the identity class, are closed under the class power
    map, have order dividing |G| and are closed under products.  Sorted by
    order, then by class indices.
    """
    key = ("normal_subgroups",)
    if key in classes._cache:
        return classes._cache[key]
    r = len(classes)
    if r > class_bound:
        raise LatticeError(f"{r} conjugacy classes exceeds the bound {class_bound}")
    n = G.order
    closure = [frozenset(classes.power_map[c]) for c in range(r)]
    sizes = classes.sizes
    found: list[NormalSubgroup] = []

    def visit(c: int, chosen: frozenset[int], excluded: frozenset[int], total: int) -> None:
        if c == r:
            if n % total == 0:
                members = frozenset().union(*(classes[i].members for i in chosen))
                if _is_closed(G, classes, chosen, members):
                    found.append(NormalSubgroup(members, chosen))
            return
        if c in chosen:
            visit(c + 1, chosen, excluded, total)
            return
        visit(c + 1, chosen, excluded | {c}, total)
        new = closure[c] - chosen
        if new & excluded:
            return
        grown = total + sum(sizes[i] for i in new)
        if grown > n:
            return
        visit(c + 1, chosen | new, excluded, grown)

    visit(1, frozenset([0]), frozenset(), 1)
    found.sort(key=lambda N: (N.order, N.sorted_classes()))
    classes._cache[key] = found
    return found


def largest_normal_over(G: Group, classes: ConjugacyClasses, L: NormalSubgroup, pi: PrimeSet) -> NormalSubgroup:
    """Largest normal N >= L with |N:L| a pi-number (the preimage of O_pi(G/L))."""
    primes = pi.resolve(G)
    cands = [N for N in all_normal_subgroups(G, classes)
             if L <= N and is_pi_number(N.order // L.order, primes)]
    top = max(cands, key=lambda N: N.order)
    if not all(N <= top for N in cands):
        raise LatticeError("no unique largest normal subgroup over L with pi-index")
    return top


def o_pi(G: Group, classes: ConjugacyClasses, pi: PrimeSet) -> NormalSubgroup:
    return largest_normal_over(G, classes, trivial_subgroup(classes), pi)


def o_upper_pi_prime(G: Group, classes: ConjugacyClasses, N: NormalSubgroup, pi: PrimeSet) -> NormalSubgroup:
    """Subgroup generated by the pi-elements of N; the smallest normal subgroup of N with pi'-index."""
    pic = pi_elements(G, classes, pi)
    seeds = [x for x in N.members if classes.class_of[x] in pic]
    out = normal_closure(G, classes, seeds)
    if not out <= N:
        raise LatticeError("generated subgroup escapes N")
    if not is_pi_number(N.order // out.order, pi.prime_complement(G).resolve(G)):
        raise LatticeError("index of the generated subgroup is not a pi'-number")
    return out


def is_pi_separable(G: Group, classes: ConjugacyClasses, pi: PrimeSet) -> tuple[bool, list[NormalSubgroup]]:
    """Grow 1 <= T1 <= T2 <= ... alternating pi and pi' steps; separable iff it reaches G.

    Both starting orders are tried; the witness is the series that reached G,
    or the longer failed one.
    """
    top = whole_group(classes)
    sides = (pi, pi.prime_complement(G))
    best: list[NormalSubgroup] = []
    for first in (0, 1):
        series = [trivial_subgroup(classes)]
        turn = first
        stalled = 0
        while series[-1] != top and stalled < 2:
            nxt = largest_normal_over(G, classes, series[-1], sides[turn])
            if nxt == series[-1]:
                stalled += 1
            else:
                stalled = 0
                series.append(nxt)
            turn ^= 1
        if series[-1] == top:
            return True, series
        if len(series) > len(best):
            best = series
    return False, best
