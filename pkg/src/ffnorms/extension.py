"""Multiquadratic Kummer extensions of F_q(t) and their place decomposition.

An extension is described by independent square classes d_1, ..., d_r
(q odd).  Decomposition and inertia subgroups at a place are computed as
spans of local reciprocity vectors of a uniformizer and of a lifted
nonsquare unit; no integral closure of F_q[t] is ever constructed.  The
identification is guarded by a splitting oracle in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .fields import Fq
from .factorization import factor, squarefree_part
from .poly import ONE, X, Poly, pkey, pmul, pscale, pstr
from .places import INFINITE_PLACE, Place, residue_field
from .symbols import artin_vector

MAX_RANK = 4


class ExtensionError(ValueError):
    """Raised when a requested extension falls outside the model class."""


@dataclass(frozen=True)
class DecompData:
    """Local data of a place: decomposition/inertia subgroups and the
    derived splitting counts e * f_rel * g_count = 2^r."""

    place: Place
    D: tuple[int, ...]
    I: tuple[int, ...]
    e: int
    f_rel: int
    g_count: int
    degrees_above: tuple[int, ...]


def _span(masks: list[int]) -> tuple[int, ...]:
    out = {0}
    for m in masks:
        out |= {x ^ m for x in out}
    return tuple(sorted(out))


class KummerExtension:
    """L = F_q(t)(sqrt(d_1), ..., sqrt(d_r)) with q odd.

    Generators are normalized to (monic squarefree part) times a canonical
    constant square-class representative; dependent generator sets are
    rejected rather than silently reduced.
    """

    def __init__(
        self, F: Fq, gens: list[Poly], seed: int = 0, denominator_degree_cap: int = 1
    ):
        if F.p == 2:
            raise ExtensionError("the Kummer model requires odd q")
        if not 1 <= len(gens) <= MAX_RANK:
            raise ExtensionError(f"rank must be between 1 and {MAX_RANK}")
        self.F = F
        self.seed = seed
        self.denominator_degree_cap = denominator_degree_cap
        self.raw_gens = tuple(tuple(g) for g in gens)
        pairs = []
        for g in self.raw_gens:
            if not g:
                raise ExtensionError("zero is not a Kummer generator")
            m, c = squarefree_part(F, g, seed)
            c = 1 if F.quadratic_character(c) > 0 else F.smallest_nonsquare()
            pairs.append((m, c))
        self.pairs = tuple(pairs)
        self.gens = tuple(pscale(F, m, c) for m, c in pairs)
        self.r = len(self.gens)
        self._check_independent()
        ram: set[Poly] = set()
        for m, _ in self.pairs:
            _, facs = factor(F, m, seed)
            ram.update(p for p, _ in facs)
        self.ramified_finite = tuple(
            Place(p) for p in sorted(ram, key=pkey)
        )
        self.scan_places = self.ramified_finite + (INFINITE_PLACE,)
        self._decomp: dict[Place, DecompData] = {}
        self._const_degree: int | None = None

    def _check_independent(self) -> None:
        F = self.F
        for mask in range(1, 1 << self.r):
            prod = ONE
            for i in range(self.r):
                if mask >> i & 1:
                    prod = pmul(F, prod, self.gens[i])
            m, c = squarefree_part(F, prod, self.seed)
            if m == ONE and F.quadratic_character(c) > 0:
                raise ExtensionError(
                    "generators are dependent modulo squares "
                    f"(subproduct mask {mask:b} is trivial)"
                )

    # -- invariants ------------------------------------------------------

    def constant_field_degree(self) -> int:
        """Degree f of the full constant field over F_q (1 or 2)."""
        if self._const_degree is None:
            F = self.F
            found = 1
            for mask in range(1, 1 << self.r):
                prod = ONE
                for i in range(self.r):
                    if mask >> i & 1:
                        prod = pmul(F, prod, self.gens[i])
                m, c = squarefree_part(F, prod, self.seed)
                if m == ONE and F.quadratic_character(c) < 0:
                    found = 2
                    break
            self._const_degree = found
        return self._const_degree

    def decomposition_at(self, place: Place) -> DecompData:
        data = self._decomp.get(place)
        if data is None:
            data = self._compute_decomposition(place)
            self._decomp[place] = data
        return data

    def _compute_decomposition(self, place: Place) -> DecompData:
        F = self.F
        if place.is_infinite:
            uniformizer = (ONE, X)  # 1/t
            nonsquare_unit: tuple = ((F.smallest_nonsquare(),), ONE)
        else:
            uniformizer = (place.prime, ONE)
            k = residue_field(F, place.prime)
            nonsquare_unit = (k.smallest_nonsquare(), ONE)
        v_pi = artin_vector(self, uniformizer, place)
        v_u = artin_vector(self, nonsquare_unit, place)
        D = _span([v_pi, v_u])
        I = _span([v_u])
        e = len(I)
        f_rel = len(D) // len(I)
        g_count = (1 << self.r) // len(D)
        f = self.constant_field_degree()
        num = f_rel * place.degree
        if num % f:
            raise AssertionError("residue degree incompatible with constant field")
        degrees_above = (num // f,) * g_count
        return DecompData(place, D, I, e, f_rel, g_count, degrees_above)

    def residue_degree_at(self, place: Place) -> int:
        """Common residue degree f_rel of the places above v (L/K is Galois)."""
        return self.decomposition_at(place).f_rel

    def infinite_degree_gcd(self) -> int:
        """gcd of the degrees of the infinite places of L (the invariant h)."""
        degrees = self.decomposition_at(INFINITE_PLACE).degrees_above
        out = 0
        for d in degrees:
            out = gcd(out, d)
        return out

    def __repr__(self) -> str:
        gens = ",".join(f"sqrt({pstr(g)})" for g in self.gens)
        return f"<F_{self.F.q}(t)({gens})>"
