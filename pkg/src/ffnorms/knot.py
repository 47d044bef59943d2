"""Knot-group sizes and the constant norm counts of the extension.

The knot group measures the failure of the local-global norm principle.
It is trivial for cyclic extensions; for biquadratic extensions it has
order 2 exactly when every decomposition group is cyclic, which only
needs checking at the ramified places and infinity since unramified
decomposition groups are generated by Frobenius and hence cyclic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .extension import KummerExtension
from .globalnorm import Witness, global_norm_verdict
from .indicators import constant_norm_group
from .poly import const


def knot_size(ext: KummerExtension) -> int | None:
    """Order of the knot group; None when the rank is not supported."""
    if ext.r == 1:
        return 1
    if ext.r == 2:
        for place in ext.scan_places:
            if len(ext.decomposition_at(place).D) > 2:
                return 1
        return 2
    return None


def local_norm_constant_count(ext: KummerExtension) -> int:
    """Number of unit constants that are everywhere-local norms."""
    return len(constant_norm_group(ext))


@dataclass(frozen=True)
class ConstantNormCount:
    """Certified/undetermined split of the constant global-norm count.

    For rank 1 the count is exact (undetermined = 0); otherwise the true
    value lies in [certified, certified + undetermined].
    """

    certified: int
    undetermined: int
    witnesses: tuple[tuple[int, Witness | None], ...]
    bound: int


def global_norm_constant_count(ext: KummerExtension, bound: int) -> ConstantNormCount:
    certified = 0
    undetermined = 0
    witnesses = []
    for c in ext.F.units():
        verdict = global_norm_verdict(ext, const(c), bound)
        if verdict.is_norm:
            certified += 1
            witnesses.append((c, verdict.witness))
        elif verdict.is_undetermined:
            undetermined += 1
    return ConstantNormCount(certified, undetermined, tuple(witnesses), bound)
