"""Transport between an inseparable source model and its separable one.

An extension of inseparability degree p^i is studied over the rescaled
variable u = t^(p^-i); the coefficient-wise p-th-root map below carries
polynomial counts between the two models without changing any values.
No inseparable field arithmetic exists anywhere else.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Sequence

from .counting import CountRow
from .fields import Fq
from .poly import Poly, trim


def poly_pth_root(F: Fq, alpha: Poly, i: int) -> Poly:
    """Coefficient-wise inverse Frobenius applied i times: the image of
    alpha under t -> u with u^(p^i) = t.  Degrees are preserved."""
    if not alpha:
        raise ValueError("zero has no transported representative")
    if i < 0:
        raise ValueError("inseparability exponent must be non-negative")
    out = alpha
    for _ in range(i):
        out = tuple(F.pth_root(c) for c in out)
    return out


def expand_inseparable(F: Fq, beta: Poly, i: int) -> Poly:
    """Inverse of :func:`poly_pth_root`: raise to the p^i-th power in
    characteristic p under the substitution u^(p^i) = t."""
    if i < 0:
        raise ValueError("inseparability exponent must be non-negative")
    out = beta
    for _ in range(i):
        out = tuple(F.pow(c, F.p) for c in out)
    return trim(out)


def transport_count_rows(rows: Sequence[CountRow], i: int) -> list[CountRow]:
    """Counts for the inseparable source model: values are unchanged (the
    transport is a degree-preserving bijection); provenance is recorded."""
    if i < 0:
        raise ValueError("inseparability exponent must be non-negative")
    return [replace(row, insep_power=i) for row in rows]
