"""Exact arithmetic in cyclotomic fields.

An element of Q(zeta_n) is stored as rational coefficients over the power
basis 1, z, ..., z^(phi(n)-1), reduced modulo the n-th cyclotomic polynomial.
After every operation the conductor is shrunk to the smallest m with the
value in Q(zeta_m), so two values are equal iff their fields are equal.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    # x^n - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num = _exact_divide(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_divide(num: list[int], den: Sequence[int]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j, b in enumerate(den):
                num[i - dd + j] -= c * b
    assert not any(num[:dd]), "inexact polynomial division"
    return out


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_reductions(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds z^k (0 <= k < n) written over the power basis of Q(zeta_n)."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by z, then reduce the z^deg term with the monic Phi_n
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi)]
    return tuple(rows)


def _reduce_exponents(n: int, terms: dict[int, Number]) -> tuple[Fraction, ...]:
    """Sum of c * z_n^k over terms {k: c}, in the power basis."""
    rows = _power_reductions(n)
    out = [Fraction(0)] * totient(n)
    for k, c in terms.items():
        if not c:
            continue
        for i, r in enumerate(rows[k % n]):
            if r:
                out[i] += c * r
    return tuple(out)


@lru_cache(maxsize=None)
def _embedding(m: int, n: int) -> tuple[tuple[tuple[Fraction, ...], ...], tuple[tuple[Fraction, ...], ...]]:
    """Embedding matrix of Q(zeta_m) into Q(zeta_n) and a left inverse on its image.

    Returns (E, P): column j of E is z_m^j written in Q(zeta_n); P is a
    phi(m) x phi(n) matrix with P E = I, built from pivot rows of E.
    """
    step = n // m
    cols = [_reduce_exponents(n, {j * step: 1}) for j in range(totient(m))]
    rows_n, cols_m = totient(n), totient(m)
    E = tuple(tuple(cols[j][i] for j in range(cols_m)) for i in range(rows_n))
    # Gauss-Jordan on [E | I] to find a left inverse
    aug = [list(E[i]) + [Fraction(int(i == k)) for k in range(rows_n)] for i in range(rows_n)]
    pivots = []
    r = 0
    for c in range(cols_m):
        piv = next((i for i in range(r, rows_n) if aug[i][c] != 0), None)
        assert piv is not None, "embedding is not injective"
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows_n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(r)
        r += 1
    P = tuple(tuple(aug[i][cols_m:]) for i in range(cols_m))
    return E, P


class Cyclotomic:
    """An exact element of a cyclotomic field in canonical form."""

    __slots__ = ("n", "coeffs", "_hash")

    def __init__(self, n: int, coeffs: Iterable[Number], *, _canonical: bool = False):
        if n < 1:
            raise ValueError("conductor must be positive")
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != totient(n):
            raise ValueError(f"expected {totient(n)} coefficients for conductor {n}")
        if not _canonical:
            n, coeffs = _minimize(n, coeffs)
        self.n = n
        self.coeffs = coeffs
        self._hash = None

    # construction -----------------------------------------------------

    @classmethod
    def from_rational(cls, q: Number) -> Cyclotomic:
        return cls(1, (Fraction(q),), _canonical=True)

    @classmethod
    def from_exponents(cls, n: int, terms: dict[int, Number]) -> Cyclotomic:
        """Sum of c * zeta_n^k for k, c in terms."""
        return cls(n, _reduce_exponents(n, terms))

    @classmethod
    def coerce(cls, x: Cyclotomic | Number) -> Cyclotomic:
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.from_rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Cyclotomic")

    # field structure ---------------------------------------------------

    def lift(self, n: int) -> tuple[Fraction, ...]:
        """Coordinates of self in the power basis of Q(zeta_n); n must be a multiple of self.n."""
        if n % self.n:
            raise ValueError(f"conductor {self.n} does not divide {n}")
        if n == self.n:
            return self.coeffs
        step = n // self.n
        return _reduce_exponents(n, {k * step: c for k, c in enumerate(self.coeffs) if c})

    def _binary(self, other):
        other = Cyclotomic.coerce(other)
        n = _lcm(self.n, other.n)
        return n, self.lift(n), other.lift(n)

    def __add__(self, other):
        try:
            n, a, b = self._binary(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic(n, (x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.n, (-c for c in self.coeffs), _canonical=True)

    def __sub__(self, other):
        try:
            n, a, b = self._binary(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic(n, (x - y for x, y in zip(a, b)))

    def __rsub__(self, other):
        return Cyclotomic.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.n, (c * other for c in self.coeffs), _canonical=other != 0)
        try:
            n, a, b = self._binary(other)
        except TypeError:
            return NotImplemented
        terms: dict[int, Fraction] = {}
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    terms[i + j] = terms.get(i + j, 0) + x * y
        return Cyclotomic(n, _reduce_exponents(n, terms))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Cyclotomic:
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic.from_rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def galois(self, a: int) -> Cyclotomic:
        """Image under zeta_n -> zeta_n^a, with a coprime to the conductor."""
        if gcd(a, self.n) != 1:
            raise ValueError(f"{a} is not a unit modulo {self.n}")
        return Cyclotomic(self.n, _reduce_exponents(self.n, {k * a: c for k, c in enumerate(self.coeffs) if c}))

    def conj(self) -> Cyclotomic:
        return self.galois(-1 % self.n if self.n > 1 else 1)

    def norm(self) -> Fraction:
        """Field norm from Q(zeta_n) down to Q."""
        out = Cyclotomic.from_rational(1)
        for a in range(1, self.n + 1):
            if gcd(a, self.n) == 1:
                out = out * self.galois(a)
        assert out.is_rational()
        return out.coeffs[0]

    def inverse(self) -> Cyclotomic:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        out = Cyclotomic.from_rational(1)
        for a in range(2, self.n + 1):
            if gcd(a, self.n) == 1:
                out = out * self.galois(a)
        nrm = (out * self)
        assert nrm.is_rational()
        return out * (1 / nrm.coeffs[0])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * Cyclotomic.coerce(other).inverse()

    # predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.n == 1 and self.coeffs[0] == 0

    def is_rational(self) -> bool:
        return self.n == 1

    def is_integer(self) -> bool:
        return self.n == 1 and self.coeffs[0].denominator == 1

    def to_fraction(self) -> Fraction:
        if self.n != 1:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __int__(self) -> int:
        q = self.to_fraction()
        if q.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return q.numerator

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.n == 1 and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.coeffs)) if self.n > 1 else hash(self.coeffs[0])
        return self._hash

    def sort_key(self) -> tuple:
        """Deterministic total order; larger rationals sort first."""
        return (self.n, tuple(-c for c in self.coeffs))

    # io ----------------------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": [[c.numerator, c.denominator] for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> Cyclotomic:
        if isinstance(obj, int):
            return cls.from_rational(obj)
        try:
            n = int(obj["n"])
            coeffs = [Fraction(int(a), int(b)) for a, b in obj["coeffs"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed cyclotomic value {obj!r}") from exc
        return cls(n, coeffs)

    def __repr__(self) -> str:
        return f"Cyclotomic({self})"

    def __str__(self) -> str:
        if self.n == 1:
            return str(self.coeffs[0])
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
                continue
            z = f"z{self.n}" + (f"^{k}" if k > 1 else "")
            if c == 1:
                parts.append(z)
            elif c == -1:
                parts.append("-" + z)
            else:
                parts.append(f"{c}*{z}")
        return " + ".join(parts).replace("+ -", "- ")


def _minimize(n: int, coeffs: tuple[Fraction, ...]) -> tuple[int, tuple[Fraction, ...]]:
    for m in _divisors(n)[:-1]:
        E, P = _embedding(m, n)
        sub = tuple(sum(p * v for p, v in zip(row, coeffs) if p and v) for row in P)
        if all(sum(e * s for e, s in zip(row, sub) if e and s) == v for row, v in zip(E, coeffs)):
            return m, tuple(Fraction(s) for s in sub)
    return n, coeffs


ZERO = Cyclotomic.from_rational(0)
ONE = Cyclotomic.from_rational(1)


def root_of_unity(n: int, k: int = 1) -> Cyclotomic:
    """zeta_n^k in canonical form."""
    if n < 1:
        raise ValueError("n must be positive")
    return Cyclotomic.from_exponents(n, {k % n: 1})


def is_root_of_unity(x: Cyclotomic) -> bool:
    """True iff x^m = 1 for some m; every root of unity in Q(zeta_n) has order dividing lcm(2, n)."""
    m = _lcm(2, x.n)
    return x ** m == ONE


def sum_is_degree(values: Sequence[Cyclotomic], n: int, *, verify: bool = False) -> bool:
    """Decide whether a sum of roots of unity equals n.

    Since each summand has absolute value 1, the sum equals the count only
    when every summand is 1.  With ``verify`` each input is checked to be a
    root of unity first.
    """
    if verify:
        for v in values:
            if not is_root_of_unity(Cyclotomic.coerce(v)):
                raise ValueError(f"{v} is not a root of unity")
    total = ZERO
    for v in values:
        total = total + v
    return total == n
