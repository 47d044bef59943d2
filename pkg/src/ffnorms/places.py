"""Places of F_q(t), valuations, residues and factored ideals.

A place is either a monic irreducible of F_q[t] or the infinite place,
whose valuation of f/g is deg g - deg f (so ord_inf(t) = -1).  Nonzero
fractional ideals of F_q[t] are kept in factored form; the degree of an
ideal is the degree of its associated finite divisor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .fields import Fq
from . import factorization
from .poly import (
    ONE,
    ZERO,
    Poly,
    deg,
    enumerate_polys,
    pbezout,
    pdivmod,
    pgcd,
    pkey,
    pmod,
    pmul,
    pstr,
    trim,
)


@dataclass(frozen=True)
class Place:
    """A place of F_q(t): ``prime`` is a monic irreducible, or None for infinity."""

    prime: Poly | None

    @property
    def is_infinite(self) -> bool:
        return self.prime is None

    @property
    def degree(self) -> int:
        return 1 if self.prime is None else len(self.prime) - 1

    def sort_key(self) -> tuple:
        # finite places in canonical polynomial order, infinity last
        if self.prime is None:
            return (1, ())
        return (0, pkey(self.prime))

    def __str__(self) -> str:
        if self.prime is None:
            return "inf"
        return f"({pstr(self.prime)})"


INFINITE_PLACE = Place(None)


def finite_place(F: Fq, prime: Poly, check: bool = True) -> Place:
    if check:
        if not prime or prime[-1] != 1:
            raise ValueError("finite place needs a monic polynomial")
        if not factorization.is_irreducible(F, prime):
            raise ValueError(f"{pstr(prime)} is not irreducible")
    return Place(prime)


def val_unit(F: Fq, place: Place, f: Poly) -> tuple[int, Poly]:
    """(ord_v f, residue of the unit part f / pi^ord) for nonzero f."""
    if not f:
        raise ValueError("valuation of zero")
    if place.is_infinite:
        return -deg(f), (f[-1],)
    prime = place.prime
    v = 0
    while True:
        q, r = pdivmod(F, f, prime)
        if r:
            break
        f = q
        v += 1
    return v, pmod(F, f, prime)


def ord_at(F: Fq, place: Place, num: Poly, den: Poly = ONE) -> int:
    """ord_v(num/den); for the infinite place this is deg den - deg num."""
    if not num or not den:
        raise ValueError("ord needs a nonzero rational function")
    if place.is_infinite:
        return deg(den) - deg(num)
    return val_unit(F, place, num)[0] - val_unit(F, place, den)[0]


def residue(F: Fq, place: Place, num: Poly, den: Poly = ONE) -> Poly:
    """Image of the v-unit num/den in the residue field (power-basis vector)."""
    if not num or not den:
        raise ValueError("residue needs a nonzero rational function")
    vn, rn = val_unit(F, place, num)
    vd, rd = val_unit(F, place, den)
    if vn != vd:
        raise ValueError(f"{pstr(num)}/{pstr(den)} has nonzero valuation at {place}")
    k = residue_field(F, place.prime)
    return k.mul(rn, k.inv(rd))


class ResidueField:
    """Arithmetic in F_q[t]/(P), elements as reduced coefficient tuples.

    ``prime=None`` models the residue field of the infinite place, which
    is F_q itself (vectors of length <= 1).
    """

    def __init__(self, F: Fq, prime: Poly | None):
        self.F = F
        self.prime = prime
        self.degree = 1 if prime is None else len(prime) - 1
        self.size = F.q**self.degree
        self._squares: frozenset[Poly] | None = None

    def reduce(self, f: Poly) -> Poly:
        if self.prime is None:
            if deg(f) > 0:
                raise ValueError("constants only at the infinite place")
            return f
        return pmod(self.F, f, self.prime)

    def mul(self, a: Poly, b: Poly) -> Poly:
        if self.prime is None:
            if not a or not b:
                return ZERO
            return (self.F.mul(a[0], b[0]),)
        return pmod(self.F, pmul(self.F, a, b), self.prime)

    def inv(self, a: Poly) -> Poly:
        if not a:
            raise ZeroDivisionError("inverse of zero residue")
        if self.prime is None:
            return (self.F.inv(a[0]),)
        g, u, _ = pbezout(self.F, a, self.prime)
        if g != ONE:
            raise ZeroDivisionError("residue is not invertible")
        return pmod(self.F, u, self.prime)

    def pow(self, a: Poly, n: int) -> Poly:
        if n < 0:
            a = self.inv(a)
            n = -n
        r: Poly = (1,) if self.prime is None else pmod(self.F, ONE, self.prime)
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def elements(self) -> Iterator[Poly]:
        if self.prime is None:
            yield from ((c,) if c else () for c in self.F.elements())
        else:
            yield from enumerate_polys(self.F, self.degree - 1)

    def squares(self) -> frozenset[Poly]:
        if self._squares is None:
            self._squares = frozenset(self.mul(a, a) for a in self.elements())
        return self._squares

    def chi(self, a: Poly) -> int:
        """Quadratic character of the residue field: 0 / +1 / -1."""
        if not a:
            return 0
        return 1 if a in self.squares() else -1

    def smallest_nonsquare(self) -> Poly:
        for a in self.elements():
            if a and a not in self.squares():
                return a
        raise ValueError("every residue is a square")

    def neg_one(self) -> Poly:
        return (self.F.neg(1),)


@lru_cache(maxsize=None)
def residue_field(F: Fq, prime: Poly | None) -> ResidueField:
    return ResidueField(F, prime)


@dataclass(frozen=True)
class Ideal:
    """Nonzero fractional ideal of F_q[t] in sorted factored form."""

    factors: tuple[tuple[Poly, int], ...]

    @staticmethod
    def unit() -> "Ideal":
        return Ideal(())

    @staticmethod
    def from_factors(pairs) -> "Ideal":
        pairs = tuple(sorted(((p, e) for p, e in pairs if e), key=lambda it: pkey(it[0])))
        return Ideal(pairs)

    def degree(self) -> int:
        return sum(e * (len(p) - 1) for p, e in self.factors)

    def support(self) -> tuple[Place, ...]:
        return tuple(Place(p) for p, _ in self.factors)

    def exponent(self, prime: Poly) -> int:
        for p, e in self.factors:
            if p == prime:
                return e
        return 0

    def is_coprime(self, other: "Ideal") -> bool:
        mine = {p for p, _ in self.factors}
        return not any(p in mine for p, _ in other.factors)

    def mul(self, other: "Ideal") -> "Ideal":
        acc: dict[Poly, int] = dict(self.factors)
        for p, e in other.factors:
            acc[p] = acc.get(p, 0) + e
        return Ideal.from_factors(acc.items())

    def radical(self) -> "Ideal":
        return Ideal.from_factors((p, 1) for p, _ in self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "(1)"
        return "".join(
            f"({pstr(p)})" + (f"^{e}" if e != 1 else "") for p, e in self.factors
        )


def ideal_of(F: Fq, alpha: Poly, seed: int = 0) -> Ideal:
    """The principal ideal (alpha) in factored form; constants give (1)."""
    if not alpha:
        raise ValueError("the zero element generates no fractional ideal")
    _, factors = factorization.factor(F, alpha, seed)
    return Ideal(factors)


def ideal_degree(a: Ideal) -> int:
    return a.degree()


def poly_radical(F: Fq, n: Ideal) -> Poly:
    """Product of the primes of n, for fast coprimality tests."""
    out = ONE
    for p, _ in n.factors:
        out = pmul(F, out, p)
    return out


def is_coprime_poly(F: Fq, alpha: Poly, rad: Poly) -> bool:
    if rad == ONE:
        return True
    return pgcd(F, alpha, rad) == ONE
