"""Dense univariate polynomials over an :class:`~ffnorms.fields.Fq` context.

A polynomial is an immutable little-endian coefficient tuple with no
trailing zeros; ``()`` is the zero polynomial.  The canonical order used
everywhere (factor listings, enumeration, golden files) is ascending
integer encoding, which coincides with (degree, then coefficient tuple
read from the leading coefficient down, lexicographic).
"""

from __future__ import annotations

from typing import Iterator

from .fields import Fq

Poly = tuple[int, ...]

ZERO: Poly = ()
ONE: Poly = (1,)
X: Poly = (0, 1)


def deg(f: Poly) -> int:
    """Degree, with deg(0) = -1."""
    return len(f) - 1


def lead(f: Poly) -> int:
    return f[-1]


def is_monic(f: Poly) -> bool:
    return bool(f) and f[-1] == 1


def trim(cs) -> Poly:
    i = len(cs)
    while i and cs[i - 1] == 0:
        i -= 1
    return tuple(cs[:i])


def const(c: int) -> Poly:
    return (c,) if c else ()


def padd(F: Fq, a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    add = F.add
    for i, c in enumerate(b):
        out[i] = add(out[i], c)
    return trim(out)


def pneg(F: Fq, a: Poly) -> Poly:
    neg = F.neg
    return tuple(neg(c) for c in a)


def psub(F: Fq, a: Poly, b: Poly) -> Poly:
    return padd(F, a, pneg(F, b))


def pscale(F: Fq, a: Poly, c: int) -> Poly:
    if c == 0:
        return ZERO
    if c == 1:
        return a
    mul = F.mul
    return tuple(mul(x, c) for x in a)


def pmul(F: Fq, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ZERO
    res = [0] * (len(a) + len(b) - 1)
    add = F.add
    mul = F.mul
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    res[i + j] = add(res[i + j], mul(ai, bj))
    return tuple(res)


def psquare(F: Fq, a: Poly) -> Poly:
    return pmul(F, a, a)


def pdivmod(F: Fq, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return ZERO, a
    rem = list(a)
    db = len(b) - 1
    quot = [0] * (len(a) - db)
    invlead = F.inv(b[-1])
    sub = F.sub
    mul = F.mul
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c:
            qc = mul(c, invlead)
            quot[i - db] = qc
            for j in range(db + 1):
                rem[i - db + j] = sub(rem[i - db + j], mul(qc, b[j]))
    return trim(quot), trim(rem)


def pmod(F: Fq, a: Poly, b: Poly) -> Poly:
    return pdivmod(F, a, b)[1]


def pdiv_exact(F: Fq, a: Poly, b: Poly) -> Poly | None:
    """Quotient a/b when the division is exact, else None."""
    q, r = pdivmod(F, a, b)
    return q if not r else None


def pmonic(F: Fq, f: Poly) -> tuple[Poly, int]:
    """(monic multiple of f by a unit, the original leading coefficient)."""
    if not f:
        raise ValueError("zero polynomial has no monic form")
    lc = f[-1]
    if lc == 1:
        return f, 1
    return pscale(F, f, F.inv(lc)), lc


def pgcd(F: Fq, a: Poly, b: Poly) -> Poly:
    """Monic gcd; pgcd(0, 0) = 0."""
    while b:
        a, b = b, pmod(F, a, b)
    if not a:
        return ZERO
    return pmonic(F, a)[0]


def pbezout(F: Fq, a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, u, v) with u*a + v*b = g, g the monic gcd."""
    r0, r1 = a, b
    u0, u1 = ONE, ZERO
    v0, v1 = ZERO, ONE
    while r1:
        q, r = pdivmod(F, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, psub(F, u0, pmul(F, q, u1))
        v0, v1 = v1, psub(F, v0, pmul(F, q, v1))
    if not r0:
        return ZERO, ZERO, ZERO
    lc = F.inv(r0[-1])
    return pscale(F, r0, lc), pscale(F, u0, lc), pscale(F, v0, lc)


def peval(F: Fq, f: Poly, x: int) -> int:
    acc = 0
    add = F.add
    mul = F.mul
    for c in reversed(f):
        acc = add(mul(acc, x), c)
    return acc


def pderiv(F: Fq, f: Poly) -> Poly:
    if len(f) <= 1:
        return ZERO
    mul = F.mul
    p = F.p
    out = [mul(f[i], i % p) for i in range(1, len(f))]
    return trim(out)


def ppow(F: Fq, f: Poly, n: int) -> Poly:
    r = ONE
    while n:
        if n & 1:
            r = pmul(F, r, f)
        f = pmul(F, f, f)
        n >>= 1
    return r


def ppow_mod(F: Fq, base: Poly, n: int, mod: Poly) -> Poly:
    r = pmod(F, ONE, mod)
    base = pmod(F, base, mod)
    while n:
        if n & 1:
            r = pmod(F, pmul(F, r, base), mod)
        base = pmod(F, pmul(F, base, base), mod)
        n >>= 1
    return r


def psqrt(F: Fq, f: Poly) -> Poly | None:
    """Exact square root with canonical (smallest) leading coefficient."""
    if not f:
        return ZERO
    d = len(f) - 1
    if d % 2:
        return None
    if F.p == 2:
        raise ValueError("polynomial square root requires odd characteristic")
    m = d // 2
    rl = F.sqrt(f[-1])
    if rl is None:
        return None
    if F.q <= 25 and len(f) >= 7:
        # a square polynomial has no nonsquare values
        for c in range(F.q):
            if F.quadratic_character(peval(F, f, c)) < 0:
                return None
    root = [0] * (m + 1)
    root[m] = rl
    inv2lead = F.inv(F.mul(F.add(1, 1), rl))
    sub = F.sub
    mul = F.mul
    add = F.add
    for i in range(m - 1, -1, -1):
        # coefficient of t^(m+i) in root^2: 2*root[m]*root[i] + known terms
        acc = 0
        for j in range(i + 1, m):
            acc = add(acc, mul(root[j], root[m + i - j]))
        target = sub(f[m + i], acc)
        root[i] = mul(target, inv2lead)
    cand = trim(root)
    if pmul(F, cand, cand) != f:
        return None
    return cand


def pkey(f: Poly) -> tuple:
    """Canonical sort key: degree, then coefficients from the top down."""
    return (len(f), tuple(reversed(f)))


def penc(F: Fq, f: Poly) -> int:
    """Integer encoding in base q (little-endian digits = coefficients)."""
    n = 0
    for c in reversed(f):
        n = n * F.q + c
    return n


def pdec(F: Fq, n: int) -> Poly:
    out = []
    while n:
        out.append(n % F.q)
        n //= F.q
    return tuple(out)


def monic_by_index(F: Fq, d: int, i: int) -> Poly:
    """The i-th monic polynomial of degree d (0 <= i < q^d)."""
    out = [0] * (d + 1)
    for j in range(d):
        out[j] = i % F.q
        i //= F.q
    out[d] = 1
    return tuple(out)


def enumerate_monic(F: Fq, d: int) -> Iterator[Poly]:
    """All q^d monic polynomials of degree d in canonical order."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    for i in range(F.q**d):
        yield monic_by_index(F, d, i)


def enumerate_polys(F: Fq, max_deg: int) -> Iterator[Poly]:
    """All polynomials of degree <= max_deg (including 0), canonical order."""
    for n in range(F.q ** (max_deg + 1)):
        yield pdec(F, n)


def pstr(f: Poly, var: str = "t") -> str:
    if not f:
        return "0"
    parts = []
    for k in range(len(f) - 1, -1, -1):
        c = f[k]
        if not c:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            head = "" if c == 1 else str(c)
            parts.append(f"{head}{var}" if k == 1 else f"{head}{var}^{k}")
    return "+".join(parts)
