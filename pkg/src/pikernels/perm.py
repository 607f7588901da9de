"""Permutation groups at desk scale.

Elements are enumerated once and referred to by integer ids afterwards;
id 0 is always the identity.  Products use the left-to-right convention:
``(p * q)[i] == q[p[i]]``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from pathlib import Path
from typing import Iterable, Sequence

DEFAULT_ORDER_BOUND = 100_000
# full multiplication table below this order, on-demand products above
TABLE_BOUND = 4096


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(len(imgs))):
            raise GroupError(f"not a permutation: {list(self.images)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> Permutation:
        imgs = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                imgs[a] = b
        return cls(tuple(imgs))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(_compose(self.images, other.images))

    def inverse(self) -> Permutation:
        return Permutation(_invert(self.images))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            j = self.images[i]
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            seen.add(i)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(q[i] for i in p)


def _invert(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


class StabilizerChain:
    """Deterministic Schreier-Sims: base points, strong generators per level, transversals."""

    def __init__(self, degree: int, generators: Iterable[tuple[int, ...]]):
        self.degree = degree
        ident = tuple(range(degree))
        gens = [g for g in generators if g != ident]
        self.base: list[int] = []
        self.strong: list[list[tuple[int, ...]]] = []
        self.transversals: list[dict[int, tuple[int, ...]]] = []
        for g in gens:
            if all(g[b] == b for b in self.base):
                self.base.append(next(i for i in range(degree) if g[i] != i))
        self.strong = [[g for g in gens if all(g[b] == b for b in self.base[:i])] for i in range(len(self.base))]
        self.transversals = [self._orbit(i) for i in range(len(self.base))]
        self._schreier_sims()

    def _orbit(self, level: int) -> dict[int, tuple[int, ...]]:
        b = self.base[level]
        trans = {b: tuple(range(self.degree))}
        queue = deque([b])
        while queue:
            pt = queue.popleft()
            for g in self.strong[level]:
                img = g[pt]
                if img not in trans:
                    trans[img] = _compose(trans[pt], g)
                    queue.append(img)
        return trans

    def strip(self, g: tuple[int, ...], start: int = 0) -> tuple[tuple[int, ...], int]:
        for level in range(start, len(self.base)):
            img = g[self.base[level]]
            u = self.transversals[level].get(img)
            if u is None:
                return g, level
            g = _compose(g, _invert(u))
        return g, len(self.base)

    def _schreier_sims(self) -> None:
        ident = tuple(range(self.degree))
        i = len(self.base) - 1
        while i >= 0:
            grew = False
            for pt, u in list(self.transversals[i].items()):
                for s in self.strong[i]:
                    schreier = _compose(_compose(u, s), _invert(self.transversals[i][s[pt]]))
                    h, j = self.strip(schreier, i + 1)
                    if j < len(self.base) or h != ident:
                        if j == len(self.base):
                            self.base.append(next(x for x in range(self.degree) if h[x] != x))
                            self.strong.append([])
                            self.transversals.append({})
                        for level in range(i + 1, j + 1):
                            self.strong[level].append(h)
                            self.transversals[level] = self._orbit(level)
                        i = j
                        grew = True
                        break
                if grew:
                    break
            if not grew:
                i -= 1

    @property
    def order(self) -> int:
        out = 1
        for t in self.transversals:
            out *= len(t)
        return out

    def contains(self, g: tuple[int, ...]) -> bool:
        if len(g) != self.degree:
            return False
        h, j = self.strip(tuple(g))
        return j == len(self.base) and h == tuple(range(self.degree))


class Group:
    """A finite permutation group with all elements enumerated.

    Element ids follow breadth-first order over right multiplication by the
    generators, so they are reproducible for a fixed generator list.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation], name: str = "", *,
                 order_bound: int = DEFAULT_ORDER_BOUND):
        if degree < 0:
            raise GroupError("degree must be nonnegative")
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(tuple(g))
            if g.degree != degree:
                raise GroupError(f"generator {g} has degree {g.degree}, expected {degree}")
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name
        self.chain = StabilizerChain(degree, (g.images for g in gens))
        if self.chain.order > order_bound:
            raise GroupError(f"group order {self.chain.order} exceeds the enumeration bound {order_bound}")
        self._enumerate()
        if len(self.elements) != self.chain.order:
            raise GroupError("stabilizer chain order disagrees with enumeration")

    def _enumerate(self) -> None:
        ident = tuple(range(self.degree))
        self.elements: list[tuple[int, ...]] = [ident]
        self.index: dict[tuple[int, ...], int] = {ident: 0}
        gens = [g.images for g in self.generators]
        queue = deque([ident])
        while queue:
            x = queue.popleft()
            for s in gens:
                y = _compose(x, s)
                if y not in self.index:
                    self.index[y] = len(self.elements)
                    self.elements.append(y)
                    queue.append(y)
        n = len(self.elements)
        self._inv = [self.index[_invert(x)] for x in self.elements]
        self._table = None
        if n <= TABLE_BOUND:
            self._table = [[self.index[_compose(x, y)] for y in self.elements] for x in self.elements]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"Group({self.name or '?'}, order={self.order}, degree={self.degree})"

    def mul(self, x: int, y: int) -> int:
        if self._table is not None:
            return self._table[x][y]
        return self.index[_compose(self.elements[x], self.elements[y])]

    def inv(self, x: int) -> int:
        return self._inv[x]

    def conj(self, x: int, g: int) -> int:
        """g^-1 x g"""
        return self.mul(self.mul(self._inv[g], x), g)

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self._inv[x], -k
        out = 0
        base = x
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def element(self, x: int) -> Permutation:
        return Permutation(self.elements[x])

    def id_of(self, p: Permutation | Sequence[int]) -> int:
        key = p.images if isinstance(p, Permutation) else tuple(p)
        try:
            return self.index[key]
        except KeyError:
            raise GroupError(f"{p} is not an element of {self.name or 'the group'}") from None

    def contains(self, p: Permutation | Sequence[int]) -> bool:
        key = p.images if isinstance(p, Permutation) else tuple(p)
        return self.chain.contains(key)

    def generator_ids(self) -> list[int]:
        return [self.index[g.images] for g in self.generators]

    @cached_property
    def element_orders(self) -> list[int]:
        out = [0] * self.order
        for x in range(self.order):
            if out[x]:
                continue
            k, y = 1, x
            while y != 0:
                y = self.mul(y, x)
                k += 1
            out[x] = k
        return out

    @cached_property
    def exponent(self) -> int:
        e = 1
        for k in set(self.element_orders):
            e = e * k // gcd(e, k)
        return e

    @cached_property
    def classes(self) -> ConjugacyClasses:
        return conjugacy_classes(self)

    @cached_property
    def prime_divisors(self) -> tuple[int, ...]:
        return tuple(prime_factors(self.order))

    # io ----------------------------------------------------------------

    def to_json(self) -> dict:
        return {"name": self.name, "degree": self.degree,
                "generators": [list(g.images) for g in self.generators]}

    @classmethod
    def from_json(cls, obj: dict, **kw) -> Group:
        try:
            degree = int(obj["degree"])
            gens = [Permutation(tuple(g)) for g in obj["generators"]]
        except (KeyError, TypeError) as exc:
            raise GroupError(f"malformed group description: {exc}") from exc
        return cls(degree, gens, name=str(obj.get("name", "")), **kw)


def group_from_generators(degree: int, generators: Sequence[Permutation | Sequence[int]], name: str = "",
                          order_bound: int = DEFAULT_ORDER_BOUND) -> Group:
    return Group(degree, [g if isinstance(g, Permutation) else Permutation(tuple(g)) for g in generators],
                 name=name, order_bound=order_bound)


def load_group(path: str | Path, **kw) -> Group:
    with open(path) as fh:
        obj = json.load(fh)
    if "name" not in obj or not obj["name"]:
        obj["name"] = Path(path).stem
    return Group.from_json(obj, **kw)


def element_order(G: Group, x: int) -> int:
    if not 0 <= x < G.order:
        raise GroupError(f"invalid element id {x}")
    return G.element_orders[x]


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class ConjClass:
    rep: int
    members: frozenset[int]
    size: int
    order: int


@dataclass(eq=False)
class ConjugacyClasses:
    group: Group
    classes: list[ConjClass]
    class_of: list[int]
    power_map: list[list[int]]
    _cache: dict = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, c: int) -> ConjClass:
        return self.classes[c]

    @property
    def sizes(self) -> list[int]:
        return [c.size for c in self.classes]

    @property
    def orders(self) -> list[int]:
        return [c.order for c in self.classes]

    def power(self, c: int, s: int) -> int:
        return self.power_map[c][s % self.classes[c].order]

    def inverse_class(self, c: int) -> int:
        return self.power(c, -1)

    def centralizer_order(self, c: int) -> int:
        return self.group.order // self.classes[c].size


def conjugacy_classes(G: Group) -> ConjugacyClasses:
    """Conjugation orbits by flood fill; classes ordered by smallest member id."""
    gens = G.generator_ids()
    class_of = [-1] * G.order
    classes: list[ConjClass] = []
    for x in range(G.order):
        if class_of[x] >= 0:
            continue
        idx = len(classes)
        orbit = {x}
        class_of[x] = idx
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for g in gens:
                z = G.conj(y, g)
                if z not in orbit:
                    orbit.add(z)
                    class_of[z] = idx
                    queue.append(z)
        classes.append(ConjClass(rep=x, members=frozenset(orbit), size=len(orbit), order=G.element_orders[x]))
    power_map = []
    for c in classes:
        row = []
        y = 0
        for _ in range(c.order):
            row.append(class_of[y])
            y = G.mul(y, c.rep)
        power_map.append(row)
    return ConjugacyClasses(G, classes, class_of, power_map)
