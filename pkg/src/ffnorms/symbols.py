"""Tame quadratic Hilbert symbols over completions of F_q(t).

For odd q and a place v with a = ord_v f, b = ord_v g, the symbol is the
quadratic character of the residue field applied to the v-unit
(-1)^(ab) * f^b * g^(-a).  The sign convention is pinned by the
brute-force local-norm oracle in the test suite, not trusted.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from .fields import Fq
from .poly import ONE, Poly
from .places import Place, residue_field, val_unit

if TYPE_CHECKING:
    from .extension import KummerExtension

RatFun = tuple[Poly, Poly]


def as_ratfun(x) -> RatFun:
    """Accept a polynomial or a (num, den) pair."""
    if x and isinstance(x[0], tuple):
        return x[0], x[1]
    return x, ONE


def _val_and_residue(F: Fq, place: Place, x: RatFun) -> tuple[int, Poly]:
    num, den = x
    if not num or not den:
        raise ValueError("zero numerator or denominator")
    vn, rn = val_unit(F, place, num)
    vd, rd = val_unit(F, place, den)
    k = residue_field(F, place.prime)
    return vn - vd, k.mul(rn, k.inv(rd))


def hilbert_symbol(F: Fq, f, g, place: Place) -> int:
    """(f, g)_v in {+1, -1}: +1 iff f is a norm from the local extension by sqrt(g)."""
    if F.p == 2:
        raise ValueError("tame symbols require odd q")
    a, fres = _val_and_residue(F, place, as_ratfun(f))
    b, gres = _val_and_residue(F, place, as_ratfun(g))
    k = residue_field(F, place.prime)
    value = k.mul(k.pow(fres, b), k.pow(gres, -a))
    if (a * b) % 2:
        value = k.mul(value, k.neg_one())
    s = k.chi(value)
    if s == 0:
        raise AssertionError("tame symbol evaluated at a non-unit")
    return s


def symbol_bit(s: int) -> int:
    return 0 if s > 0 else 1


def artin_vector(ext: "KummerExtension", x, place: Place) -> int:
    """Local reciprocity coordinates of x in the Kummer basis, as a bitmask.

    Bit i is 0 iff x is a norm from the local quadratic extension by the
    i-th generator; the mask is additive in x (xor under multiplication).
    """
    mask = 0
    rf = as_ratfun(x)
    for i, d in enumerate(ext.gens):
        if hilbert_symbol(ext.F, rf, d, place) < 0:
            mask |= 1 << i
    return mask


def is_local_norm(ext: "KummerExtension", alpha, place: Place) -> bool:
    """True iff alpha is a norm from every (any) completion of L above v."""
    num, den = as_ratfun(alpha)
    if not num:
        raise ValueError("zero is not tested for local norms")
    return artin_vector(ext, (num, den), place) == 0
