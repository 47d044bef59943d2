"""Norm indicator functions on elements and ideals of F_q[t].

Three indicators are provided: ideal norms (per-prime residue-degree
divisibility), everywhere-local element norms (vanishing reciprocity
vectors over a finite check set) and the ideal-borne version of the
latter (some unit scaling of a generator is an everywhere-local norm).
"""

from __future__ import annotations

from .extension import KummerExtension
from .places import INFINITE_PLACE, Ideal, Place, ideal_of
from .poly import Poly, const, pscale
from .symbols import artin_vector


def local_check_places(ext: KummerExtension, alpha: Poly) -> tuple[Place, ...]:
    """supp(alpha) together with the ramified places and infinity.

    Outside this set alpha is a unit at an unramified place, where the
    reciprocity vector vanishes, so the check set is sufficient.
    """
    supp = ideal_of(ext.F, alpha, ext.seed).support()
    scan = set(ext.scan_places)
    extra = tuple(v for v in supp if v not in scan)
    return tuple(sorted(extra + ext.scan_places, key=Place.sort_key))


def is_everywhere_local_norm(ext: KummerExtension, alpha: Poly) -> bool:
    """Element-wise local-norm indicator for nonzero alpha in F_q[t]."""
    if not alpha:
        raise ValueError("zero is not tested for local norms")
    return all(artin_vector(ext, alpha, v) == 0 for v in local_check_places(ext, alpha))


def constant_profile_table(ext: KummerExtension) -> dict[int, tuple[int, ...]]:
    """Reciprocity vectors of each unit constant at the ramified scan places."""
    table = getattr(ext, "_const_profiles", None)
    if table is None:
        table = {
            c: tuple(artin_vector(ext, const(c), v) for v in ext.scan_places)
            for c in ext.F.units()
        }
        ext._const_profiles = table
    return table


def constant_norm_group(ext: KummerExtension) -> tuple[int, ...]:
    """Unit constants that are everywhere-local norms (a subgroup of F_q^x)."""
    zero = (0,) * len(ext.scan_places)
    return tuple(c for c, prof in constant_profile_table(ext).items() if prof == zero)


def has_local_norm_generator(ext: KummerExtension, monic: Poly) -> bool:
    """Ideal-borne local indicator: some c * monic is an everywhere-local norm.

    The set of qualifying constants is either empty or a coset of the
    constant norm group, so this equals "the coset is nonempty".
    """
    if not monic or monic[-1] != 1:
        raise ValueError("expected a monic generator")
    scan = set(ext.scan_places)
    for v in ideal_of(ext.F, monic, ext.seed).support():
        if v not in scan and artin_vector(ext, monic, v) != 0:
            return False
    profile = tuple(artin_vector(ext, monic, v) for v in ext.scan_places)
    return profile in set(constant_profile_table(ext).values())


def qualifying_constants(ext: KummerExtension, monic: Poly) -> tuple[int, ...]:
    """All c with c * monic an everywhere-local norm (empty or a coset)."""
    return tuple(
        c for c in ext.F.units() if is_everywhere_local_norm(ext, pscale(ext.F, monic, c))
    )


def is_ideal_norm(ext: KummerExtension, a: Ideal) -> bool:
    """1 iff a is the norm of a fractional ideal of L: at every prime of a
    the common residue degree divides the exponent."""
    for prime, exp in a.factors:
        if exp % ext.residue_degree_at(Place(prime)):
            return False
    return True
