"""Finite coefficient fields F_q with table-driven arithmetic.

Field elements are plain ints in ``range(q)``.  For q = p^e with e > 1 an
int encodes coordinates over F_p in the power basis of a fixed irreducible
modulus: ``sum(a_i * p**i)`` stands for ``sum(a_i * x**i)``.  Zero and one
are always encoded as 0 and 1.

All per-element operations are table lookups, so fields are capped at a
size suitable for exhaustive desk-scale experiments.
"""

from __future__ import annotations

from functools import lru_cache

SIZE_CAP = 4096


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _fp_mod(a: list[int], m: list[int], p: int) -> list[int]:
    # dense little-endian coefficient lists over F_p, m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, c in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul_mod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return _fp_mod(res, m, p)


def _fp_irreducible(m: list[int], p: int) -> bool:
    # trial division by every monic polynomial of degree <= deg(m)/2
    dm = len(m) - 1
    for d in range(1, dm // 2 + 1):
        for idx in range(p**d):
            cand = [0] * (d + 1)
            n = idx
            for i in range(d):
                cand[i] = n % p
                n //= p
            cand[d] = 1
            if not _fp_mod(m, cand, p):
                return False
    return True


def _default_modulus(p: int, e: int) -> tuple[int, ...]:
    # first monic irreducible of degree e in canonical (encoding) order
    for idx in range(p**e):
        cand = [0] * (e + 1)
        n = idx
        for i in range(e):
            cand[i] = n % p
            n //= p
        cand[e] = 1
        if _fp_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible modulus found")


class Fq:
    """Arithmetic context for F_q, q = p^e.

    Use :func:`GF` to obtain shared instances; identity comparison is the
    intended equality for contexts.
    """

    def __init__(self, p: int, e: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        if e < 1:
            raise ValueError(f"extension degree must be positive, got {e}")
        q = p**e
        if q > SIZE_CAP:
            raise ValueError(f"field size {q} exceeds supported cap {SIZE_CAP}")
        self.p = p
        self.e = e
        self.q = q
        self.zero = 0
        self.one = 1
        if e == 1:
            self.modulus = None
        else:
            if modulus is None:
                modulus = _default_modulus(p, e)
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree e")
            if not _fp_irreducible(list(modulus), p):
                raise ValueError("modulus is not irreducible over the prime field")
            self.modulus = modulus
        self._build_tables()

    def _decode(self, n: int) -> list[int]:
        digits = []
        while n:
            digits.append(n % self.p)
            n //= self.p
        return digits

    def _encode(self, digits: list[int]) -> int:
        n = 0
        for c in reversed(digits):
            n = n * self.p + c
        return n

    def _build_tables(self) -> None:
        p, e, q = self.p, self.e, self.q
        if e == 1:
            self._add = [[(a + b) % p for b in range(q)] for a in range(q)]
            self._mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            mod = list(self.modulus)
            vecs = [self._decode(n) for n in range(q)]
            self._add = [
                [
                    self._encode(
                        [
                            ((va[i] if i < len(va) else 0) + (vb[i] if i < len(vb) else 0)) % p
                            for i in range(e)
                        ]
                    )
                    for vb in vecs
                ]
                for va in vecs
            ]
            self._mul = [
                [self._encode(_fp_mul_mod(va, vb, mod, p)) for vb in vecs] for va in vecs
            ]
        self._neg = [self._add[a].index(0) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self._mul[a].index(1)
        self._inv = inv
        # quadratic character via the subgroup of nonzero squares
        squares = {self._mul[a][a] for a in range(1, q)}
        self._chi = [0] + [1 if a in squares else -1 for a in range(1, q)]
        sqrt: list[int | None] = [None] * q
        for r in range(q - 1, -1, -1):
            sqrt[self._mul[r][r]] = r  # downward scan leaves the smallest root
        self._sqrt = sqrt
        # coefficient p-th root: inverse of Frobenius, c -> c^(p^(e-1))
        self._proot = [self.pow(c, p ** (e - 1)) for c in range(q)]
        # raw tables for hot loops
        self.add_table = self._add
        self.mul_table = self._mul
        self.neg_table = self._neg
        self.chi_table = self._chi

    # -- arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a = self.inv(a)
            n = -n
        r = 1
        mul = self._mul
        while n:
            if n & 1:
                r = mul[r][a]
            a = mul[a][a]
            n >>= 1
        return r

    # -- derived maps --------------------------------------------------

    def quadratic_character(self, c: int) -> int:
        """0 for c = 0, +1 for nonzero squares, -1 otherwise."""
        if self.p == 2:
            raise ValueError("quadratic character requires odd characteristic")
        return self._chi[c]

    def sqrt(self, c: int) -> int | None:
        """Smallest square root of c, or None when c is a nonsquare."""
        return self._sqrt[c]

    def pth_root(self, c: int) -> int:
        """The unique d with d**p = c."""
        return self._proot[c]

    def smallest_nonsquare(self) -> int:
        for c in range(1, self.q):
            if self._chi[c] < 0:
                return c
        raise ValueError("every element is a square")

    # -- iteration -----------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def __repr__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"


@lru_cache(maxsize=None)
def GF(p: int, e: int = 1, modulus: tuple[int, ...] | None = None) -> Fq:
    """Shared field contexts; GF(5) is GF(5)."""
    return Fq(p, e, modulus)
