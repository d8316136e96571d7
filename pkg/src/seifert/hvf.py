"""Existence of horizontal vector fields on Seifert fiber spaces.

A vector field on a Seifert fiber space is horizontal when it is nowhere
tangent to the fibers.  Such a field exists exactly when either

  * the base orbifold is the 2-torus or the Klein bottle, so a nowhere-zero
    vector field on the base composes with the projection (the degree-zero
    "section" mechanism), or
  * the fibering admits a fiberwise covering of some non-zero degree ``d``
    onto the unit tangent bundle of its base.

The covering degrees form the "allowable degree set" D computed here: each
exceptional fiber imposes ``d * b_i = -1 (mod a_i)``, and for a closed
fibering the Euler numbers pin ``d * e = chi``.  With boundary, the Euler
condition disappears and only the congruences remain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import BoundaryNotSupported
from .exactmath import Congruence, crt_merge, mod_inverse
from .invariant import (
    CanonicalForm,
    SeifertInvariant,
    base_orbifold,
    euler_number,
    normalize,
)
from . import orbifold

__all__ = [
    "EmptyDegrees",
    "SingleDegree",
    "DegreeProgression",
    "DegreeSet",
    "SurfaceSection",
    "Covering",
    "CongruenceClash",
    "EulerMismatch",
    "HvfDecision",
    "allowable_degrees",
    "decide_hvf",
    "decide_hvf_boundary",
    "boundary_tangency",
]


@dataclass(frozen=True)
class EmptyDegrees:
    """No covering degree works.

    ``include_zero`` is set only by the homotopy catalog, where the section
    mechanism contributes the lone degree 0 even though no covering exists.
    """

    include_zero: bool = False

    def contains(self, d: int) -> bool:
        return d == 0 and self.include_zero

    def is_empty(self) -> bool:
        return not self.include_zero


@dataclass(frozen=True)
class SingleDegree:
    """Exactly one covering degree, pinned by the Euler condition."""

    d: int

    def contains(self, d: int) -> bool:
        return d == self.d

    def is_empty(self) -> bool:
        return False


@dataclass(frozen=True)
class DegreeProgression:
    """All non-zero ``d = residue (mod modulus)``, plus 0 when ``include_zero``."""

    residue: int
    modulus: int
    include_zero: bool = False

    def contains(self, d: int) -> bool:
        if d == 0:
            return self.include_zero
        return d % self.modulus == self.residue

    def is_empty(self) -> bool:
        return False


DegreeSet = EmptyDegrees | SingleDegree | DegreeProgression


@dataclass(frozen=True)
class SurfaceSection:
    """Horizontal field pulled back from a nowhere-zero vector field on the base."""


@dataclass(frozen=True)
class Covering:
    """Horizontal fields arising from fiberwise coverings of the base's unit
    tangent bundle, one family per allowable degree."""

    degrees: DegreeSet
    target: SeifertInvariant


@dataclass(frozen=True)
class CongruenceClash:
    """Exceptional fibers ``i`` and ``j`` impose incompatible degree congruences."""

    i: int
    j: int


@dataclass(frozen=True)
class EulerMismatch:
    """The congruences are solvable but no degree satisfies ``d * e = chi``.

    ``pin`` is the forced value chi/e when that ratio is an integer (it may
    be zero or sit outside the congruence class), and None otherwise.
    """

    euler: Fraction
    chi: Fraction
    pin: int | None


@dataclass(frozen=True)
class HvfDecision:
    """Verdict plus the mechanisms that realize it; when no horizontal vector
    field exists, ``obstruction`` names the first failed condition."""

    exists: bool
    mechanisms: tuple
    obstruction: CongruenceClash | EulerMismatch | None


def _degree_congruences(inv: SeifertInvariant) -> list[Congruence]:
    # d * b = -1 (mod a), i.e. d = -b^{-1}; alpha = 1 gives the vacuous class.
    return [Congruence(-mod_inverse(b, a), a) for a, b in inv.pairs]


@lru_cache(maxsize=1 << 16)
def _merged_class(residues: tuple[tuple[int, int], ...]) -> Congruence | None:
    merged = Congruence(0, 1)
    for a, r in residues:
        nxt = crt_merge(merged, Congruence(-mod_inverse(r, a), a))
        if nxt is None:
            return None
        merged = nxt
    return merged


def _merge_conditions(inv):
    # the merged class only depends on the residues b mod a, so grid-scale
    # callers hit the cache; the clash report needs input order, rare path
    residues = tuple(sorted((a, b % a) for a, b in inv.pairs if a >= 2))
    merged = _merged_class(residues)
    if merged is not None:
        return merged, None
    conds = _degree_congruences(inv)
    acc = Congruence(0, 1)
    for j, cond in enumerate(conds):
        nxt = crt_merge(acc, cond)
        if nxt is None:
            # pairwise solvability implies joint solvability, so some single
            # earlier condition already contradicts this one
            i = next(k for k in range(j) if crt_merge(conds[k], cond) is None)
            return None, CongruenceClash(i, j)
        acc = nxt
    raise AssertionError("cached congruence merge disagreed with the direct merge")


def _solve(inv: SeifertInvariant):
    merged, clash = _merge_conditions(inv)
    if merged is None:
        return EmptyDegrees(), clash
    if not inv.closed:
        return DegreeProgression(merged.residue, merged.modulus), None
    e = euler_number(inv)
    x = orbifold.chi(base_orbifold(inv))
    if e != 0:
        ratio = x / e
        pin = int(ratio) if ratio.denominator == 1 else None
        if pin is not None and pin != 0 and merged.contains(pin):
            return SingleDegree(pin), None
        return EmptyDegrees(), EulerMismatch(e, x, pin)
    if x == 0:
        return DegreeProgression(merged.residue, merged.modulus), None
    return EmptyDegrees(), EulerMismatch(e, x, None)


def allowable_degrees(inv: SeifertInvariant) -> DegreeSet:
    """Degrees of fiberwise coverings onto the base's unit tangent bundle.

    Each pair demands ``d = -b_i^{-1} (mod a_i)``; the congruences merge into
    a single class when compatible.  Closed case: a non-zero Euler number
    pins ``d = chi/e`` (a single degree, valid only if it is a non-zero
    integer in the class), while ``e = 0`` admits the whole class if
    ``chi = 0`` and nothing otherwise.  With boundary the merged class is the
    answer; its modulus divides the lcm of the alphas.
    """
    return _solve(inv)[0]


def _is_surface_section_base(base) -> bool:
    return orbifold.is_torus(base) or orbifold.is_klein_bottle(base)


def decide_hvf(inv: SeifertInvariant) -> HvfDecision:
    """Decide existence of a horizontal vector field on a closed fibering."""
    if not inv.closed:
        raise BoundaryNotSupported("use decide_hvf_boundary for bounded fiberings")
    base = base_orbifold(inv)
    mechanisms = []
    if _is_surface_section_base(base):
        mechanisms.append(SurfaceSection())
    degrees, obstruction = _solve(inv)
    if not degrees.is_empty():
        target = normalize(orbifold.unit_tangent_invariant(base)).invariant()
        mechanisms.append(Covering(degrees, target))
    exists = bool(mechanisms)
    return HvfDecision(exists, tuple(mechanisms), None if exists else obstruction)


def decide_hvf_boundary(inv: SeifertInvariant) -> HvfDecision:
    """Decide existence for a fibering with boundary.

    Any bounded surface base carries a nowhere-zero vector field, so the
    section mechanism needs only the absence of cone points; the covering
    mechanism needs only the degree congruences (no Euler condition).
    """
    if inv.closed:
        raise ValueError("invariant has no boundary; use decide_hvf")
    base = base_orbifold(inv)
    mechanisms = []
    if not base.cone_orders:
        mechanisms.append(SurfaceSection())
    merged, clash = _merge_conditions(inv)
    if merged is not None:
        target = CanonicalForm(
            inv.genus_code,
            inv.boundary_count,
            tuple(sorted((a, a - 1) for a, _ in inv.pairs if a >= 2)),
            None,
        ).invariant()
        mechanisms.append(
            Covering(DegreeProgression(merged.residue, merged.modulus), target)
        )
    exists = bool(mechanisms)
    return HvfDecision(exists, tuple(mechanisms), None if exists else clash)


def boundary_tangency(inv: SeifertInvariant) -> bool:
    """Whether a horizontal field everywhere tangent (equivalently, everywhere
    transverse) to the boundary exists: only over the annulus or Mobius band."""
    if inv.closed:
        raise ValueError("boundary tangency needs an invariant with boundary")
    base = base_orbifold(inv)
    return orbifold.is_annulus(base) or orbifold.is_mobius_band(base)
