"""Small exact linear algebra over Q and over prime fields."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rref_q(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    M = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    if not M:
        return M, pivots
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank_q(rows: Sequence[Sequence]) -> int:
    return len(rref_q(rows)[1])


def solve_q(basis: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Coefficients x with sum_i x_i * basis[i] == target, or None.

    The basis rows must be linearly independent; the solution is then unique.
    """
    k = len(basis)
    if k == 0:
        return [] if all(t == 0 for t in target) else None
    # columns = basis vectors, augmented by target
    aug = [[basis[i][j] for i in range(k)] + [target[j]] for j in range(len(target))]
    R, pivots = rref_q(aug)
    if k in pivots:
        return None
    if pivots != list(range(k)):
        raise ValueError("basis vectors are linearly dependent")
    return [R[i][k] for i in range(k)]


# prime field -----------------------------------------------------------

def rref_mod(rows: Sequence[Sequence[int]], q: int) -> tuple[list[list[int]], list[int]]:
    M = [[x % q for x in row] for row in rows]
    pivots: list[int] = []
    if not M:
        return M, pivots
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, q)
        M[r] = [v * inv % q for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(a - f * b) % q for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def nullspace_mod(A: Sequence[Sequence[int]], q: int) -> list[list[int]]:
    """Basis of {x : A x = 0} over F_q."""
    n = len(A[0]) if A else 0
    R, pivots = rref_mod(A, q)
    free = [c for c in range(n) if c not in pivots]
    out = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = -R[i][f] % q
        out.append(v)
    return out
