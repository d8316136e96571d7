"""Marked lens spaces and the classification of their fiberings.

A lens space is two solid tori glued along their boundaries; a marking is a
choice of orientation for the two core circles.  With oriented longitudes the
gluing matrix takes the form ``[[-q2, p], [*, q1]]`` with determinant -1, and
``L(p, q)`` denotes the marked lens space with ``q1 = q``.  The integer ``p``
is well defined and ``q`` is well defined modulo ``p``; swapping the two tori
replaces ``q`` by its inverse mod ``p`` (the determinant forces
``q1 * q2 = 1 (mod p)``), so

    L(p, q) = L(p, q')   as marked spaces  iff  q' = q or q*q' = 1 (mod p).

Reversing one core gives the same oriented manifold with a different marking,
``L(-p, -q)``; reversing the manifold's orientation gives ``L(-p, q)``.
Composing with the relabeling move yields the classical homeomorphism
criterion: ``L(p1, q1)`` and ``L(p2, q2)`` are homeomorphic iff
``|p1| = |p2|`` and ``q1 = +-q2^{+-1} (mod p)``.

A genus-zero Seifert invariant with at most two exceptional fibers is a
fibered marked lens space, with

    p = a1*b2 + a2*b1      and      q = a1'*b2 + a2*b1'

for any Bezout companion ``a1*b1' - b1*a1' = 1``; such a fibering carries a
horizontal vector field exactly when ``p != 0`` and ``q = -1 (mod p)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import IncompatibleCover, NotALensForm, NotCoprime, ZeroDegree
from .exactmath import ext_gcd
from .invariant import SeifertInvariant, normalize

__all__ = [
    "MarkedLens",
    "Theorem1Case",
    "LensClassification",
    "lens_from_invariant",
    "marked_equal",
    "reverse_orientation_lens",
    "oriented_diffeomorphic",
    "homeomorphic",
    "fibered_lens_hvf",
    "lens_cover",
    "classify_lens",
    "exceptional_lens_fibering",
    "enumerate_lens_fiberings",
]


@dataclass(frozen=True)
class MarkedLens:
    """``L(p, q)`` with the marking representative canonicalized.

    ``q`` is reduced into ``[0, |p|)`` when ``p != 0``; for ``p = 0`` (the
    product of a sphere and a circle) coprimality forces ``q = +-1`` and the
    canonical representative is 1.
    """

    p: int
    q: int

    def __post_init__(self):
        if math.gcd(self.p, self.q) != 1:
            raise NotCoprime(message=f"p = {self.p} and q = {self.q} are not coprime")
        object.__setattr__(self, "q", self.q % abs(self.p) if self.p != 0 else 1)

    def __str__(self):
        return f"L({self.p}, {self.q})"


def lens_from_invariant(inv: SeifertInvariant) -> MarkedLens:
    """The marked lens space of a genus-zero fibering with at most two
    exceptional fibers.

    The invariant is normalized first, so any representative of such a
    fibering is accepted; more than two exceptional fibers (or non-zero
    genus, or boundary) raises NotALensForm.  The Bezout companions come
    from ext_gcd's deterministic choice; the resulting ``q`` is independent
    of that choice modulo ``p``.
    """
    if not inv.closed or inv.genus_code != 0:
        raise NotALensForm("need a closed genus-zero invariant")
    cf = normalize(inv)
    if len(cf.pairs) > 2:
        raise NotALensForm("more than two exceptional fibers")
    pairs = list(cf.pairs) + [(1, 0)] * (2 - len(cf.pairs))
    (a1, b1), (a2, b2) = pairs
    b1 += cf.b * a1  # fold the integer shift into the first ratio
    _, x, y = ext_gcd(a1, b1)  # a1*x + b1*y = 1
    beta1p, alpha1p = x, -y  # a1*beta1p - b1*alpha1p = 1
    p = a1 * b2 + a2 * b1
    q = alpha1p * b2 + a2 * beta1p
    return MarkedLens(p, q)


def marked_equal(a: MarkedLens, b: MarkedLens) -> bool:
    """Same marked lens space: equal ``p`` and ``q`` equal or inverse mod p."""
    if a.p != b.p:
        return False
    if a.p == 0:
        return a.q == b.q
    m = abs(a.p)
    return (a.q - b.q) % m == 0 or (a.q * b.q - 1) % m == 0


def reverse_orientation_lens(a: MarkedLens) -> MarkedLens:
    """The oppositely oriented manifold with the same marking: L(-p, q)."""
    return MarkedLens(-a.p, a.q)


def oriented_diffeomorphic(a: MarkedLens, b: MarkedLens) -> bool:
    """Same oriented manifold, markings forgotten.

    Beyond the marked-space moves this allows reversing one core, which sends
    (p, q) to (-p, -q).
    """
    return marked_equal(a, b) or marked_equal(a, MarkedLens(-b.p, -b.q))


def homeomorphic(a: MarkedLens, b: MarkedLens) -> bool:
    """Brody's criterion: |p| equal and q1 = +-q2^{+-1} (mod p)."""
    if abs(a.p) != abs(b.p):
        return False
    if a.p == 0:
        return True  # canonical q is 1 on both sides
    m = abs(a.p)
    return (
        (a.q - b.q) % m == 0
        or (a.q + b.q) % m == 0
        or (a.q * b.q - 1) % m == 0
        or (a.q * b.q + 1) % m == 0
    )


def fibered_lens_hvf(a: MarkedLens) -> bool:
    """Whether a fibering presenting this marked lens space carries a
    horizontal vector field: ``p != 0`` and ``q = -1 (mod p)``."""
    return a.p != 0 and (a.q + 1) % abs(a.p) == 0


def lens_cover(a: MarkedLens, d: int) -> MarkedLens:
    """The marked lens space fiberwise covered by ``a`` with degree ``d``,
    namely ``L(d*p, q)`` with the same canonical representative ``q``.

    The covering construction only fixes ``q`` modulo ``p`` while the covered
    space needs it modulo ``d*p``; this function keeps the canonical
    representative and raises IncompatibleCover when that integer shares a
    factor with ``d*p``.
    """
    if d == 0:
        raise ZeroDegree("covering degree must be non-zero")
    if math.gcd(d * a.p, a.q) != 1:
        raise IncompatibleCover(
            f"canonical marking q = {a.q} shares a factor with d*p = {d * a.p}"
        )
    return MarkedLens(d * a.p, a.q)


class Theorem1Case(Enum):
    ALL_HAVE = "all_have"
    MIXED_INFINITE = "mixed_infinite"
    EXACTLY_ONE = "exactly_one"
    NONE_HAVE = "none_have"


@dataclass(frozen=True)
class LensClassification:
    case: Theorem1Case
    witness: SeifertInvariant | None = None


def classify_lens(p: int, q: int) -> LensClassification:
    """How many Seifert fiberings of the lens space L(p, q) carry a
    horizontal vector field, for ``p >= 0`` and ``q`` coprime to ``p``.

      * p = 1 or 2: every fibering does;
      * p >= 3 and q = +-1 (mod p): infinitely many do and infinitely many
        do not;
      * p >= 8 divisible by 4 and q = p/2 +- 1 (mod p): exactly one does,
        the fibering over the projective plane with one cone point of order
        p/4 (returned as the witness);
      * otherwise (including p = 0): none do.
    """
    if p < 0:
        raise ValueError("p must be non-negative; apply orientation moves first")
    if math.gcd(p, q) != 1:
        raise NotCoprime(message=f"p = {p} and q = {q} are not coprime")
    if p in (1, 2):
        return LensClassification(Theorem1Case.ALL_HAVE)
    if p >= 3 and (q % p in (1, p - 1)):
        return LensClassification(Theorem1Case.MIXED_INFINITE)
    if p >= 8 and p % 4 == 0 and q % p in (p // 2 + 1, p // 2 - 1):
        # disjoint from the previous case: p/2 +- 1 = +-1 (mod p) only for p = 4
        assert q % p not in (1, p - 1)
        witness = SeifertInvariant(-1, ((p // 4, -1),))
        return LensClassification(Theorem1Case.EXACTLY_ONE, witness)
    return LensClassification(Theorem1Case.NONE_HAVE)


def exceptional_lens_fibering(alpha: int) -> tuple[SeifertInvariant, MarkedLens]:
    """The one fibering of a lens space that is not a two-torus gluing: the
    unit tangent bundle of the projective plane with a cone point of order
    ``alpha``, living on L(4*alpha, 2*alpha + 1)."""
    if alpha < 1:
        raise ValueError("alpha must be a positive integer")
    return (
        SeifertInvariant(-1, ((alpha, -1),)),
        MarkedLens(4 * alpha, 2 * alpha + 1),
    )


def enumerate_lens_fiberings(target: MarkedLens, bound: int) -> list[SeifertInvariant]:
    """All two-fiber genus-zero fiberings of the marked lens space ``target``
    with ``a_i <= bound`` and ``|b_i| <= bound``, deduplicated up to
    fibering isomorphism and returned in canonical order."""
    if bound < 1:
        raise ValueError("bound must be a positive integer")
    candidates = [
        (a, b)
        for a in range(1, bound + 1)
        for b in range(-bound, bound + 1)
        if math.gcd(a, b) == 1
    ]
    seen = {}
    for i, pair1 in enumerate(candidates):
        for pair2 in candidates[i:]:
            inv = SeifertInvariant(0, (pair1, pair2))
            cf = normalize(inv)
            key = (cf.pairs, cf.b)
            if key in seen:
                continue
            if marked_equal(lens_from_invariant(inv), target):
                seen[key] = cf
    return [cf.invariant() for _, cf in sorted(seen.items())]
