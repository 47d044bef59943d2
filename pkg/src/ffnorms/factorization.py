"""Factoring in F_q[t]: squarefree split, distinct-degree, equal-degree.

The equal-degree stage is randomized (Cantor-Zassenhaus, odd q); its
random choices are drawn from a generator seeded by the input polynomial
and the experiment seed, so the factorization of a given polynomial is
the same regardless of call order, partitioning or thread count.
"""

from __future__ import annotations

import random

from .fields import Fq
from .poly import (
    ONE,
    X,
    ZERO,
    Poly,
    deg,
    pdec,
    pdivmod,
    penc,
    pderiv,
    pgcd,
    pmod,
    pmonic,
    pmul,
    ppow_mod,
    psub,
    pkey,
    trim,
)


def _rng_for(F: Fq, f: Poly, seed: int) -> random.Random:
    return random.Random(((seed & 0xFFFFFFFF) << 64) ^ (penc(F, f) % (1 << 61)) ^ (F.q << 8))


def _pth_root_descend(F: Fq, f: Poly) -> Poly:
    # f = h(t^p) with h recovered by coefficient p-th roots
    p = F.p
    out = [0] * ((len(f) - 1) // p + 1)
    for i in range(0, len(f), p):
        out[i // p] = F.pth_root(f[i])
    return trim(out)


def _squarefree_blocks(F: Fq, f: Poly, mult: int, out: list[tuple[Poly, int]]) -> None:
    # f monic; appends (squarefree block, multiplicity) pairs
    if deg(f) == 0:
        return
    df = pderiv(F, f)
    if not df:
        _squarefree_blocks(F, _pth_root_descend(F, f), mult * F.p, out)
        return
    c = pgcd(F, f, df)
    w, _ = pdivmod(F, f, c)
    i = 1
    while deg(w) > 0:
        y = pgcd(F, w, c)
        z, _ = pdivmod(F, w, y)
        if deg(z) > 0:
            out.append((z, mult * i))
        i += 1
        w = y
        c, _ = pdivmod(F, c, y)
    if deg(c) > 0:
        _squarefree_blocks(F, _pth_root_descend(F, c), mult * F.p, out)


def _distinct_degree(F: Fq, f: Poly) -> list[tuple[Poly, int]]:
    # f monic squarefree; returns (product of primes of degree d, d)
    res = []
    h = pmod(F, X, f)
    i = 1
    rest = f
    while deg(rest) >= 2 * i:
        h = ppow_mod(F, h, F.q, rest)
        g = pgcd(F, psub(F, h, pmod(F, X, rest)), rest)
        if deg(g) > 0:
            res.append((g, i))
            rest, _ = pdivmod(F, rest, g)
            h = pmod(F, h, rest)
        i += 1
    if deg(rest) > 0:
        res.append((rest, deg(rest)))
    return res


def _equal_degree(F: Fq, f: Poly, d: int, rng: random.Random) -> list[Poly]:
    # f monic squarefree, all prime factors of degree d; odd q
    if deg(f) == d:
        return [f]
    exp = (F.q**d - 1) // 2
    while True:
        r = trim([rng.randrange(F.q) for _ in range(deg(f))])
        if deg(r) < 1:
            continue
        g = pgcd(F, r, f)
        if 0 < deg(g) < deg(f):
            break
        s = psub(F, ppow_mod(F, r, exp, f), ONE)
        g = pgcd(F, s, f)
        if 0 < deg(g) < deg(f):
            break
    rest, _ = pdivmod(F, f, g)
    return _equal_degree(F, g, d, rng) + _equal_degree(F, rest, d, rng)


def factor(F: Fq, f: Poly, seed: int = 0) -> tuple[int, tuple[tuple[Poly, int], ...]]:
    """Full factorization (leading coefficient, sorted (prime, multiplicity))."""
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if F.p == 2:
        raise ValueError("factorization requires odd characteristic")
    monic, lc = pmonic(F, f)
    if deg(monic) == 0:
        return lc, ()
    counts: dict[Poly, int] = {}
    blocks: list[tuple[Poly, int]] = []
    _squarefree_blocks(F, monic, 1, blocks)
    for block, mult in blocks:
        for prod, d in _distinct_degree(F, block):
            for prime in _equal_degree(F, prod, d, _rng_for(F, prod, seed)):
                counts[prime] = counts.get(prime, 0) + mult
    primes = sorted(counts, key=pkey)
    return lc, tuple((p, counts[p]) for p in primes)


def squarefree_part(F: Fq, f: Poly, seed: int = 0) -> tuple[Poly, int]:
    """f = c * m * s^2 with m monic squarefree; returns (m, c)."""
    lc, factors = factor(F, f, seed)
    m = ONE
    for prime, mult in factors:
        if mult % 2:
            m = pmul(F, m, prime)
    return m, lc


def is_irreducible(F: Fq, f: Poly, seed: int = 0) -> bool:
    if deg(f) < 1:
        return False
    _, factors = factor(F, f, seed)
    return len(factors) == 1 and factors[0][1] == 1
