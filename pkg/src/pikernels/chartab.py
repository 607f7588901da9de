"""Ordinary character tables: Dixon-Schneider computation, JSON exchange, kernels.

The table is found over a prime field F_q with q = 1 mod exp(G): class sums
act on the centre of the group algebra, and their common eigenvectors are the
central characters.  Values are lifted back to exact cyclotomics from the
class power map by recovering the eigenvalue multiplicities of each element.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .cyclo import Cyclotomic, ONE, ZERO
from .linalg import nullspace_mod, rank_q, rref_mod
from .normal import NormalSubgroup, _from_members
from .perm import ConjugacyClasses, Group, prime_factors

PRIME_SEARCH_BOUND = 10**7


class TableError(ValueError):
    pass


@dataclass(frozen=True)
class Character:
    values: tuple[Cyclotomic, ...]
    classes: ConjugacyClasses | None = field(default=None, compare=False, repr=False)

    @property
    def degree(self) -> int:
        return int(self.values[0])

    def __getitem__(self, c: int) -> Cyclotomic:
        return self.values[c]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def is_principal(self) -> bool:
        return all(v == ONE for v in self.values)

    def sort_key(self) -> tuple:
        return (self.degree, tuple(v.sort_key() for v in self.values))


@dataclass
class CharacterTable:
    """Irreducible characters plus the class data they are indexed by.

    ``class_indices`` maps each column to a class of the attached group; for
    an ordinary table it is every class, for a Brauer table the p-regular ones.
    """

    name: str
    class_orders: list[int]
    class_sizes: list[int]
    irreducibles: list[Character]
    mode: str = "ordinary"
    p: int | None = None
    group: Group | None = None
    classes: ConjugacyClasses | None = None
    class_indices: list[int] | None = None

    def __len__(self) -> int:
        return len(self.irreducibles)

    def __iter__(self):
        return iter(self.irreducibles)

    def __getitem__(self, i: int) -> Character:
        return self.irreducibles[i]

    @property
    def order(self) -> int:
        if self.group is not None:
            return self.group.order
        return sum(self.class_sizes)

    @property
    def degrees(self) -> list[int]:
        return [chi.degree for chi in self.irreducibles]

    def to_json(self) -> dict:
        out = {
            "group": self.name,
            "classes": [{"order": o, "size": s} for o, s in zip(self.class_orders, self.class_sizes)],
            "mode": self.mode,
        }
        if self.p is not None:
            out["p"] = self.p
        out["chars"] = [[v.to_json() for v in chi.values] for chi in self.irreducibles]
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)


# -- Dixon-Schneider ---------------------------------------------------------

def _is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


def choose_modulus(exponent: int, order: int, bound: int = PRIME_SEARCH_BOUND, above: int = 0) -> int:
    """Smallest prime q = 1 (mod exponent) with q > 2 sqrt(order) and q > above."""
    q = exponent + 1
    while q <= bound:
        if q * q > 4 * order and q > above and _is_prime(q):
            return q
        q += exponent
    raise TableError(f"no prime = 1 mod {exponent} below {bound}")


def _primitive_root(q: int) -> int:
    fac = prime_factors(q - 1)
    for g in range(2, q):
        if all(pow(g, (q - 1) // f, q) != 1 for f in fac):
            return g
    return 1


def structure_constants(G: Group, classes: ConjugacyClasses) -> list[list[list[int]]]:
    """a[j][i][k] = #{x in C_j : x^-1 z_k in C_i} for a fixed z_k in C_k."""
    r = len(classes)
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    for k, ck in enumerate(classes):
        z = ck.rep
        for j, cj in enumerate(classes):
            row = a[j]
            for x in cj.members:
                row[classes.class_of[G.mul(G.inv(x), z)]][k] += 1
    return a


def _split_eigenspaces(mats: list[list[list[int]]], r: int, q: int) -> list[list[int]]:
    """Common eigenvectors of the class matrices, one per central character."""
    spaces = [[[int(i == j) for j in range(r)] for i in range(r)]]
    for M in mats:
        if all(len(s) == 1 for s in spaces):
            break
        nxt = []
        for basis in spaces:
            if len(basis) == 1:
                nxt.append(basis)
                continue
            basis, pivots = rref_mod(basis, q)
            d = len(basis)
            # action of M on the subspace, in coordinates read at the pivot columns
            images = [[sum(M[i][k] * b[k] for k in range(r)) % q for i in range(r)] for b in basis]
            A = [[images[s][pivots[t]] for s in range(d)] for t in range(d)]
            pieces = []
            for lam in range(q):
                shifted = [[(A[t][s] - (lam if s == t else 0)) % q for s in range(d)] for t in range(d)]
                null = nullspace_mod(shifted, q)
                if null:
                    pieces.append([[sum(c[s] * basis[s][k] for s in range(d)) % q for k in range(r)] for c in null])
            if sum(len(p) for p in pieces) != d:
                raise TableError(f"class matrix not diagonalizable modulo {q}")
            nxt.extend(pieces)
        spaces = nxt
    if any(len(s) != 1 for s in spaces):
        raise TableError(f"eigenspaces failed to split modulo {q}")
    return [s[0] for s in spaces]


def _table_mod(G: Group, classes: ConjugacyClasses, q: int) -> list[Character]:
    r = len(classes)
    n = G.order
    e = G.exponent
    consts = structure_constants(G, classes)
    vecs = _split_eigenspaces(consts, r, q)
    if len(vecs) != r:
        raise TableError("wrong number of central characters")
    z = pow(_primitive_root(q), (q - 1) // e, q)
    sizes = classes.sizes
    inv_class = [classes.inverse_class(c) for c in range(r)]
    max_degree = math.isqrt(n)
    chars = []
    for v in vecs:
        if v[0] == 0:
            raise TableError("central character vanishes at the identity")
        s = pow(v[0], -1, q)
        omega = [x * s % q for x in v]
        norm = sum(omega[c] * omega[inv_class[c]] * pow(sizes[c], -1, q) for c in range(r)) % q
        d2 = n * pow(norm, -1, q) % q
        degree = next((d for d in range(1, max_degree + 1) if d * d % q == d2), None)
        if degree is None:
            raise TableError(f"no degree with square {d2} modulo {q}")
        vals_mod = [omega[c] * degree * pow(sizes[c], -1, q) % q for c in range(r)]
        values = []
        for c in range(r):
            o = classes[c].order
            w = pow(z, e // o, q)
            o_inv = pow(o, -1, q)
            mult = {}
            for k in range(o):
                m = sum(vals_mod[classes.power(c, t)] * pow(w, (-k * t) % o, q) for t in range(o)) * o_inv % q
                if m > degree:
                    raise TableError(f"eigenvalue multiplicity {m} exceeds degree {degree}")
                if m:
                    mult[k] = m
            if sum(mult.values()) != degree:
                raise TableError("eigenvalue multiplicities do not sum to the degree")
            values.append(Cyclotomic.from_exponents(o, mult))
        chars.append(Character(tuple(values), classes))
    return chars


def compute_table(G: Group, classes: ConjugacyClasses | None = None, *, name: str | None = None,
                  prime_bound: int = PRIME_SEARCH_BOUND, attempts: int = 5) -> CharacterTable:
    classes = classes if classes is not None else G.classes
    q = choose_modulus(G.exponent, G.order, prime_bound)
    last: Exception | None = None
    for _ in range(attempts):
        try:
            chars = _table_mod(G, classes, q)
            break
        except TableError as exc:
            last = exc
            q = choose_modulus(G.exponent, G.order, prime_bound, above=q)
    else:
        raise TableError(f"table computation failed: {last}")
    chars.sort(key=Character.sort_key)
    table = CharacterTable(name if name is not None else G.name, classes.orders, classes.sizes, chars,
                           group=G, classes=classes, class_indices=list(range(len(classes))))
    check_ordinary(table)
    return table


# -- verification ------------------------------------------------------------

def inner_product(table: CharacterTable, a: Sequence[Cyclotomic], b: Sequence[Cyclotomic]) -> Cyclotomic:
    total = ZERO
    for s, x, y in zip(table.class_sizes, a, b):
        total = total + x * y.conj() * s
    return total * Fraction(1, table.order)


def _inverse_columns(table: CharacterTable) -> list[int] | None:
    """Column of the inverse class for each column, read from the values' conjugates."""
    if table.classes is not None and table.class_indices is not None:
        pos = {c: i for i, c in enumerate(table.class_indices)}
        return [pos[table.classes.inverse_class(c)] for c in table.class_indices]
    return None


def check_ordinary(table: CharacterTable) -> None:
    """Raise TableError unless both orthogonality relations hold exactly."""
    chars = table.irreducibles
    r = len(table.class_orders)
    if len(chars) != r:
        raise TableError(f"{len(chars)} characters for {r} classes")
    n = table.order
    for chi in chars:
        if len(chi) != r:
            raise TableError("character length does not match the class count")
        if not chi.values[0].is_integer() or int(chi.values[0]) <= 0:
            raise TableError("degree must be a positive integer")
        if n % chi.degree:
            raise TableError(f"degree {chi.degree} does not divide {n}")
    if sum(chi.degree ** 2 for chi in chars) != n:
        raise TableError("sum of squared degrees differs from the group order")
    conj = [[v.conj() for v in chi.values] for chi in chars]
    for i, chi in enumerate(chars):
        for j in range(i, len(chars)):
            total = ZERO
            for c in range(r):
                total = total + chi.values[c] * conj[j][c] * table.class_sizes[c]
            if total != (n if i == j else 0):
                raise TableError(f"row orthogonality fails for characters {i}, {j}")
    for c in range(r):
        for d in range(c, r):
            total = ZERO
            for i in range(len(chars)):
                total = total + chars[i].values[c] * conj[i][d]
            expect = n // table.class_sizes[c] if c == d else 0
            if total != expect:
                raise TableError(f"column orthogonality fails for classes {c}, {d}")


def check_brauer(table: CharacterTable) -> None:
    """Invariants available for a Brauer table on its own."""
    if table.p is None or not _is_prime(table.p):
        raise TableError("a Brauer table needs a prime p")
    for o in table.class_orders:
        if o % table.p == 0:
            raise TableError(f"class of order {o} is not {table.p}-regular")
    chars = table.irreducibles
    if len(chars) != len(table.class_orders):
        raise TableError("number of Brauer characters differs from the number of p-regular classes")
    for chi in chars:
        if not chi.values[0].is_integer() or int(chi.values[0]) <= 0:
            raise TableError("degree must be a positive integer")
    n = common_conductor(v for chi in chars for v in chi.values)
    if rank_q([flatten(chi.values, n) for chi in chars]) != len(chars):
        raise TableError("Brauer characters are linearly dependent")


def common_conductor(values: Iterable[Cyclotomic]) -> int:
    n = 1
    for v in values:
        n = n * v.n // math.gcd(n, v.n)
    return n


def flatten(values: Sequence[Cyclotomic], n: int | None = None) -> list[Fraction]:
    """Concatenate rational coordinates of values inside Q(zeta_n).

    Vectors compared with each other must be flattened with the same n.
    """
    if n is None:
        n = common_conductor(values)
    out: list[Fraction] = []
    for v in values:
        out.extend(v.lift(n))
    return out


# -- exchange format ------------------------------------------------------

def table_from_json(obj: dict, group: Group | None = None, classes: ConjugacyClasses | None = None) -> CharacterTable:
    try:
        name = str(obj.get("group", ""))
        cls_info = obj["classes"]
        orders = [int(c["order"]) for c in cls_info]
        sizes = [int(c["size"]) for c in cls_info]
        mode = obj.get("mode", "ordinary")
        p = obj.get("p")
        p = int(p) if p is not None else None
        rows = [[Cyclotomic.from_json(v) for v in row] for row in obj["chars"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise TableError(f"table schema mismatch: {exc}") from exc
    if mode not in ("ordinary", "brauer"):
        raise TableError(f"unsupported table mode {mode!r}")
    if any(len(row) != len(orders) for row in rows):
        raise TableError("character length does not match the class count")
    class_indices = None
    if group is not None:
        classes = classes if classes is not None else group.classes
        if mode == "ordinary":
            class_indices = list(range(len(classes)))
        else:
            if p is None:
                raise TableError("a Brauer table needs a prime p")
            class_indices = [c for c in range(len(classes)) if classes[c].order % p]
        if len(class_indices) != len(orders):
            raise TableError(f"table has {len(orders)} classes, group has {len(class_indices)}")
        for col, c in enumerate(class_indices):
            if classes[c].order != orders[col] or classes[c].size != sizes[col]:
                raise TableError(f"class {col} (order {orders[col]}, size {sizes[col]}) does not match "
                                 f"group class {c} (order {classes[c].order}, size {classes[c].size})")
    else:
        classes = None
    chars = [Character(tuple(row), classes if mode == "ordinary" else None) for row in rows]
    table = CharacterTable(name, orders, sizes, chars, mode=mode, p=p, group=group, classes=classes,
                           class_indices=class_indices)
    if mode == "ordinary":
        check_ordinary(table)
    else:
        check_brauer(table)
    return table


def ingest_table(path: str | Path, group: Group | None = None) -> CharacterTable:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise TableError(f"{path}: not JSON ({exc})") from exc
    return table_from_json(obj, group)


# -- kernels -------------------------------------------------------------

def kernel_of_character(chi: Character, classes: ConjugacyClasses | None = None) -> NormalSubgroup:
    """Union of the classes on which chi takes the value chi(1)."""
    classes = classes if classes is not None else chi.classes
    if classes is None:
        raise TableError("character is not attached to a group")
    deg = chi.values[0]
    members = set()
    for c, v in enumerate(chi.values):
        if v == deg:
            members |= classes[c].members
    K = _from_members(classes, members)
    G = classes.group
    for c in K.class_indices:
        r = classes[c].rep
        if any(G.mul(r, y) not in K.members for y in K.members):
            raise TableError("kernel is not closed under products; the table is corrupted")
    return K
