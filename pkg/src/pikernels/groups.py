"""Constructors for the small permutation groups used by the corpus and the CLI."""

from __future__ import annotations

import itertools
import re

from .perm import Group, Permutation, group_from_generators


def cyclic(n: int) -> Group:
    return group_from_generators(n, [tuple(list(range(1, n)) + [0])], name=f"c{n}")


def dihedral(order: int) -> Group:
    """Dihedral group of the given (even) order acting on order/2 points."""
    if order % 2 or order < 6:
        raise ValueError("dihedral order must be even and at least 6")
    m = order // 2
    rot = tuple((i + 1) % m for i in range(m))
    ref = tuple((-i) % m for i in range(m))
    return group_from_generators(m, [rot, ref], name=f"d{order}")


def symmetric(n: int) -> Group:
    if n < 2:
        return group_from_generators(max(n, 1), [], name=f"s{n}")
    return group_from_generators(n, [Permutation.from_cycles(n, tuple(range(n))),
                                     Permutation.from_cycles(n, (0, 1))], name=f"s{n}")


def alternating(n: int) -> Group:
    gens = [Permutation.from_cycles(n, (0, 1, k)) for k in range(2, n)]
    return group_from_generators(max(n, 1), gens, name=f"a{n}")


def klein() -> Group:
    return group_from_generators(4, [Permutation.from_cycles(4, (0, 1), (2, 3)),
                                     Permutation.from_cycles(4, (0, 2), (1, 3))], name="v4")


def affine(p: int, multipliers: list[int], name: str) -> Group:
    """x -> a x + b over F_p for a in the subgroup generated by the multipliers."""
    gens = [tuple((i + 1) % p for i in range(p))]
    gens += [tuple(a * i % p for i in range(p)) for a in multipliers]
    return group_from_generators(p, gens, name=name)


def _f3_matrix_action(mats: list[tuple[int, int, int, int]], name: str) -> Group:
    vecs = [v for v in itertools.product(range(3), repeat=2) if v != (0, 0)]
    pos = {v: i for i, v in enumerate(vecs)}
    gens = []
    for a, b, c, d in mats:
        # row vector times matrix
        gens.append(tuple(pos[((x * a + y * c) % 3, (x * b + y * d) % 3)] for x, y in vecs))
    return group_from_generators(len(vecs), gens, name=name)


def sl23() -> Group:
    return _f3_matrix_action([(1, 1, 0, 1), (1, 0, 1, 1)], "sl23")


def quaternion() -> Group:
    return _f3_matrix_action([(0, 2, 1, 0), (1, 1, 1, 2)], "q8")


def dicyclic12() -> Group:
    """C3 x| C4 with the generator of C4 inverting C3, on 3 + 4 points."""
    a = Permutation.from_cycles(7, (0, 1, 2))
    b = Permutation.from_cycles(7, (1, 2), (3, 4, 5, 6))
    return group_from_generators(7, [a, b], name="dic12")


def direct_product(G: Group, H: Group, name: str | None = None) -> Group:
    m, n = G.degree, H.degree
    gens = [tuple(g.images) + tuple(range(m, m + n)) for g in G.generators]
    gens += [tuple(range(m)) + tuple(m + x for x in h.images) for h in H.generators]
    return group_from_generators(m + n, gens, name=name or f"{G.name}x{H.name}")


_SPEC = re.compile(r"^(c|d|s|a)(\d+)$")


def named_group(spec: str) -> Group:
    """Build a group from a short name: c<n>, d<2n>, s<n>, a<n>, v4, q8, dic12, sl23, f20, f21."""
    s = spec.strip().lower()
    fixed = {"v4": klein, "q8": quaternion, "dic12": dicyclic12, "sl23": sl23,
             "f20": lambda: affine(5, [2], "f20"), "f21": lambda: affine(7, [2], "f21")}
    if s in fixed:
        return fixed[s]()
    m = _SPEC.match(s)
    if not m:
        raise ValueError(f"unknown group name {spec!r}")
    kind, n = m.group(1), int(m.group(2))
    if n < 1:
        raise ValueError(f"unknown group name {spec!r}")
    return {"c": cyclic, "d": dihedral, "s": symmetric, "a": alternating}[kind](n)


CORPUS_NAMES = ([f"c{n}" for n in range(1, 13)] + [f"d{n}" for n in range(8, 17, 2)]
                + ["s3", "s4", "a4", "q8", "dic12", "f20", "f21", "sl23", "a5"])
