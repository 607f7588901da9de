"""pi-partial characters computed from an ordinary character table.

For a pi-separable group the irreducible pi-partial characters are exactly
the restrictions to pi-elements that are not sums of smaller ones.  With
pi the complement of {p} in a p-solvable group these are the irreducible
Brauer characters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .chartab import Character, CharacterTable, TableError, flatten
from .cyclo import Cyclotomic
from .linalg import rank_q, solve_q
from .normal import PrimeSet, is_pi_separable, pi_elements
from .perm import ConjugacyClasses


class NotSeparableError(ValueError):
    pass


class PartialCharacterError(RuntimeError):
    """An internal consistency check on partial characters failed."""


@dataclass(frozen=True)
class PartialCharacter:
    pi: PrimeSet
    pi_classes: tuple[int, ...]
    values: tuple[Cyclotomic, ...]
    classes: ConjugacyClasses | None = field(default=None, compare=False, repr=False)

    @property
    def degree(self) -> int:
        return int(self.values[0])

    def value_at(self, c: int) -> Cyclotomic:
        """Value on group class c, which must be a pi-class."""
        return self.values[self.pi_classes.index(c)]

    def as_dict(self) -> dict[int, Cyclotomic]:
        return dict(zip(self.pi_classes, self.values))

    @property
    def is_principal(self) -> bool:
        return all(v == 1 for v in self.values)

    def sort_key(self) -> tuple:
        return (self.degree, tuple(v.sort_key() for v in self.values))

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def _classes_of(table: CharacterTable) -> ConjugacyClasses:
    if table.classes is None:
        raise TableError("table is not attached to a group")
    return table.classes


def restrict(chi: Character, pi: PrimeSet, classes: ConjugacyClasses | None = None) -> PartialCharacter:
    classes = classes if classes is not None else chi.classes
    if classes is None:
        raise TableError("character is not attached to a group")
    idx = tuple(sorted(pi_elements(classes.group, classes, pi)))
    return PartialCharacter(pi, idx, tuple(chi.values[c] for c in idx), classes)


def _exponent(classes: ConjugacyClasses) -> int:
    return classes.group.exponent


def nonnegative_combination(target: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]],
                            degrees: Sequence[int]) -> list[int] | None:
    """Nonnegative integers c with sum c_i vectors[i] == target, by exhaustive search.

    Coordinate 0 of every vector is its degree and bounds each coefficient.
    """
    k = len(vectors)
    coeffs = [0] * k

    def search(i: int, rest: list[Fraction]) -> bool:
        if not any(rest):
            for j in range(i, k):
                coeffs[j] = 0
            return True
        if i == k or rest[0] <= 0:
            return False
        top = int(rest[0]) // degrees[i]
        vec = vectors[i]
        for c in range(top, -1, -1):
            nxt = [r - c * v for r, v in zip(rest, vec)] if c else rest
            coeffs[i] = c
            if search(i + 1, nxt):
                return True
        return False

    return list(coeffs) if search(0, list(target)) else None


def require_separable(table: CharacterTable, pi: PrimeSet) -> None:
    classes = _classes_of(table)
    ok, _ = is_pi_separable(classes.group, classes, pi)
    if not ok:
        raise NotSeparableError(f"{table.name or 'group'} is not {pi}-separable")


def irreducible_partial_characters(table: CharacterTable, pi: PrimeSet) -> list[PartialCharacter]:
    classes = _classes_of(table)
    require_separable(table, pi)
    e = _exponent(classes)
    restrictions = sorted({restrict(chi, pi, classes) for chi in table}, key=PartialCharacter.sort_key)
    accepted: list[PartialCharacter] = []
    flat: list[list[Fraction]] = []
    for cand in restrictions:
        # constituents of a proper decomposition have strictly smaller degree
        smaller = [i for i, phi in enumerate(accepted) if phi.degree < cand.degree]
        target = flatten(cand.values, e)
        combo = nonnegative_combination(target, [flat[i] for i in smaller], [accepted[i].degree for i in smaller])
        if combo is None:
            accepted.append(cand)
            flat.append(target)
    n_pi = len(pi_elements(classes.group, classes, pi))
    if len(accepted) != n_pi:
        raise PartialCharacterError(f"found {len(accepted)} irreducible partial characters for {n_pi} pi-classes")
    if rank_q(flat) != len(accepted):
        raise PartialCharacterError("irreducible partial characters are linearly dependent")
    return accepted


@dataclass
class DecompositionMatrix:
    ordinary: list[Character]
    irreducible: list[PartialCharacter]
    entries: list[list[int]]

    def row(self, i: int) -> list[int]:
        return self.entries[i]

    def column_sums(self) -> list[int]:
        return [sum(r[j] for r in self.entries) for j in range(len(self.irreducible))]


def decomposition_matrix(table: CharacterTable, pi: PrimeSet,
                         irreducible: Sequence[PartialCharacter] | None = None) -> DecompositionMatrix:
    classes = _classes_of(table)
    if irreducible is None:
        irreducible = irreducible_partial_characters(table, pi)
    e = _exponent(classes)
    basis = [flatten(phi.values, e) for phi in irreducible]
    rows = []
    for chi in table:
        sol = solve_q(basis, flatten(restrict(chi, pi, classes).values, e))
        if sol is None:
            raise PartialCharacterError("restriction is not in the span of the irreducible partial characters")
        if any(x.denominator != 1 or x < 0 for x in sol):
            raise PartialCharacterError(f"decomposition {sol} is not a nonnegative integer vector")
        rows.append([int(x) for x in sol])
    return DecompositionMatrix(list(table), list(irreducible), rows)


def lifts(phi: PartialCharacter, table: CharacterTable, *, check: bool = True) -> list[Character]:
    """Irreducible characters of the table whose restriction is phi."""
    _classes_of(table)
    out = [chi for chi in table if all(chi.values[c] == v for c, v in zip(phi.pi_classes, phi.values))]
    if check and not out:
        raise PartialCharacterError(f"partial character {phi} has no lift")
    return out


def brauer_characters(table: CharacterTable, p: int) -> list[PartialCharacter]:
    """Irreducible Brauer characters of a p-solvable group as {p}'-partial characters."""
    pi = PrimeSet.complement(p)
    try:
        return irreducible_partial_characters(table, pi)
    except NotSeparableError:
        raise NotSeparableError(f"{table.name or 'group'} is not {p}-solvable; "
                                f"ingest an externally computed Brauer table instead") from None


def brauer_from_table(brauer: CharacterTable) -> list[PartialCharacter]:
    """Wrap the rows of an ingested Brauer table attached to a group."""
    if brauer.mode != "brauer" or brauer.classes is None or brauer.class_indices is None:
        raise TableError("need a Brauer table attached to a group")
    pi = PrimeSet.complement(brauer.p)
    idx = tuple(brauer.class_indices)
    expect = tuple(sorted(pi_elements(brauer.classes.group, brauer.classes, pi)))
    if idx != expect:
        raise TableError("Brauer table columns are not the p-regular classes")
    return [PartialCharacter(pi, idx, chi.values, brauer.classes) for chi in brauer]


def check_brauer_against(ordinary: CharacterTable, brauer: CharacterTable) -> DecompositionMatrix:
    """Every ordinary restriction must be a nonnegative integer combination of the Brauer rows."""
    ibr = brauer_from_table(brauer)
    if len(ibr) != len(ibr[0].pi_classes):
        raise TableError("Brauer table is not square")
    return decomposition_matrix(ordinary, ibr[0].pi, ibr)

