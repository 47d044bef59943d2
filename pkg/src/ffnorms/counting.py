"""Counting everywhere-local and certified global norms by degree.

Counts are exact integers.  The local count is computed along two
independent routes (element enumeration and constant-count times a
monic coset scan) which are asserted to agree.  The global count is a
pair (certified, undetermined): search incompleteness is reported, never
folded into the certified figure.

Degree-d enumeration is indexed, so work can be partitioned into index
ranges whose partial results add up independently of the partitioning.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .extension import KummerExtension
from .globalnorm import Witness, global_norm_verdict
from .indicators import (
    constant_norm_group,
    has_local_norm_generator,
    is_everywhere_local_norm,
    is_ideal_norm,
)
from .knot import knot_size
from .places import Ideal, Place, ideal_of, is_coprime_poly, poly_radical
from .poly import Poly, deg, monic_by_index, pscale
from .symbols import artin_vector


@dataclass(frozen=True)
class CountRow:
    """One degree slice of a counting experiment."""

    d: int
    n_loc: int
    n_glob_certified: int
    n_glob_undetermined: int
    ratio: Fraction | None
    bound: int
    insep_power: int = 0


@dataclass(frozen=True)
class RatioTable:
    rows: tuple[CountRow, ...]
    knot: int | None
    target: Fraction | None
    bound: int
    modulus: Ideal
    witnesses: tuple[tuple[Poly, Witness], ...] = field(default_factory=tuple)


def count_local_norms(
    ext: KummerExtension,
    n: Ideal,
    d: int,
    index_range: tuple[int, int] | None = None,
    cross_check: bool = True,
) -> int:
    """#{alpha : deg alpha = d, (alpha, n) = 1, alpha everywhere-local norm}.

    Route one scans monic generators and multiplies by the constant norm
    count (the qualifying constants form a coset); route two enumerates
    all (q-1)q^d elements through the element-wise indicator.  The two
    must agree.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    F = ext.F
    rad = poly_radical(F, n)
    lo, hi = index_range if index_range is not None else (0, F.q**d)
    kappa = len(constant_norm_group(ext))
    monic_hits = 0
    for i in range(lo, hi):
        m = monic_by_index(F, d, i)
        if not is_coprime_poly(F, m, rad):
            continue
        if has_local_norm_generator(ext, m):
            monic_hits += 1
    total = kappa * monic_hits
    if cross_check:
        element_count = 0
        for i in range(lo, hi):
            m = monic_by_index(F, d, i)
            if not is_coprime_poly(F, m, rad):
                continue
            for c in F.units():
                if is_everywhere_local_norm(ext, pscale(F, m, c)):
                    element_count += 1
        if element_count != total:
            raise AssertionError(
                f"element count {element_count} != coset count {total} at degree {d}"
            )
    return total


def count_global_norms(
    ext: KummerExtension,
    n: Ideal,
    d: int,
    bound: int,
    index_range: tuple[int, int] | None = None,
    collect_witnesses: bool = False,
) -> tuple[int, int, tuple[tuple[Poly, Witness], ...]]:
    """(certified, undetermined, witnesses) over degree-d elements coprime
    to n.  For rank 1 the certified count is exact and undetermined is 0."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    F = ext.F
    rad = poly_radical(F, n)
    lo, hi = index_range if index_range is not None else (0, F.q**d)
    certified = 0
    undetermined = 0
    witnesses = []
    for i in range(lo, hi):
        m = monic_by_index(F, d, i)
        if not is_coprime_poly(F, m, rad):
            continue
        for c in F.units():
            alpha = pscale(F, m, c)
            verdict = global_norm_verdict(ext, alpha, bound)
            if verdict.is_norm:
                certified += 1
                if collect_witnesses and verdict.witness is not None:
                    witnesses.append((alpha, verdict.witness))
            elif verdict.is_undetermined:
                undetermined += 1
    return certified, undetermined, tuple(witnesses)


def euler_factor(ext: KummerExtension, place: Place) -> Fraction:
    """Closed form of the norm-indicator geometric series at a finite prime:
    sum_k [g | k] q^(-k deg P) + 1 = (1 - q^(-g deg P))^(-1), g the common
    residue degree."""
    if place.is_infinite:
        raise ValueError("euler factors are attached to finite places")
    g = ext.residue_degree_at(place)
    size = ext.F.q ** (g * place.degree)
    return Fraction(size, size - 1)


def euler_factor_series(ext: KummerExtension, place: Place, terms: int) -> Fraction:
    """Truncated series sum_{k=0}^{terms} delta(P^k) q^(-k deg P), the
    independent route to the closed form."""
    g = ext.residue_degree_at(place)
    q_deg = ext.F.q**place.degree
    total = Fraction(0)
    for k in range(terms + 1):
        if k % g == 0:
            total += Fraction(1, q_deg**k)
    return total


def modulus_euler_product(ext: KummerExtension, n: Ideal) -> Fraction:
    """Product of the euler factors over the primes of the modulus."""
    out = Fraction(1)
    for prime, _ in n.factors:
        out *= euler_factor(ext, Place(prime))
    return out


def dirichlet_coeffs(
    ext: KummerExtension, n: Ideal, max_d: int, which: str, bound: int = 0
) -> list[int]:
    """Coefficient list c_0..c_max_d of the chosen indicator series:
    counts of monic generators of degree d coprime to n with indicator 1.

    which = "ideal" (norms of fractional ideals), "local" (some scaling is
    an everywhere-local norm) or "global" (some scaling carries a verified
    norm witness at the given bound).
    """
    if which not in ("ideal", "local", "global"):
        raise ValueError(f"unknown indicator {which!r}")
    if max_d < 0:
        raise ValueError("degree must be non-negative")
    F = ext.F
    rad = poly_radical(F, n)
    out = []
    for d in range(max_d + 1):
        hits = 0
        for i in range(F.q**d):
            m = monic_by_index(F, d, i)
            if not is_coprime_poly(F, m, rad):
                continue
            if which == "ideal":
                ok = is_ideal_norm(ext, ideal_of(F, m, ext.seed))
            elif which == "local":
                ok = has_local_norm_generator(ext, m)
            else:
                ok = any(
                    global_norm_verdict(ext, pscale(F, m, c), bound).is_norm
                    for c in F.units()
                )
            if ok:
                hits += 1
        out.append(hits)
    return out


def ratio_table(
    ext: KummerExtension,
    n: Ideal,
    d_range: tuple[int, int],
    bound: int,
    collect_witnesses: bool = False,
    insep_power: int = 0,
) -> RatioTable:
    """Rows d_lo..d_hi of local and certified-global counts with their
    ratio; the table carries the knot size and the 1/knot target."""
    lo, hi = d_range
    if lo < 0 or hi < lo:
        raise ValueError(f"bad degree range {d_range}")
    rows = []
    witnesses: list[tuple[Poly, Witness]] = []
    for d in range(lo, hi + 1):
        n_loc = count_local_norms(ext, n, d)
        certified, undetermined, wits = count_global_norms(
            ext, n, d, bound, collect_witnesses=collect_witnesses
        )
        witnesses.extend(wits)
        ratio = Fraction(certified, n_loc) if n_loc else None
        rows.append(
            CountRow(d, n_loc, certified, undetermined, ratio, bound, insep_power)
        )
    knot = knot_size(ext)
    target = Fraction(1, knot) if knot else None
    return RatioTable(tuple(rows), knot, target, bound, n, tuple(witnesses))
