"""Exact integer arithmetic primitives.

All quantities in this library are integers or exact rationals; ``Rational``
is an alias for the standard-library ``fractions.Fraction``, which already
keeps values reduced with a positive denominator.  The functions here supply
the number theory the decision procedure needs: an extended gcd with a fixed
tie-break, modular inverses, and intersection of congruence classes over
moduli that need not be coprime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Rational

from .errors import NotInvertible

__all__ = ["Rational", "Congruence", "ext_gcd", "mod_inverse", "crt_merge"]


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(|a|, |b|)``.

    Among all Bezout pairs, the returned one has ``|x|`` minimal, ties broken
    toward ``x >= 0``, and then ``|y|`` minimal.  Fixing the choice makes
    every quantity derived from a Bezout coefficient (notably lens-space
    markings) reproducible across runs.
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    g, x, y = old_r, old_s, old_t
    if g < 0:
        g, x, y = -g, -x, -y
    if g == 0:
        return 0, 0, 0
    if b == 0:
        return g, x, 0  # x = sign(a) is forced; y is free, so take 0
    step = abs(b // g)  # x is determined modulo this
    x_mod = x % step
    x = x_mod if 2 * x_mod <= step else x_mod - step
    y = (g - a * x) // b
    return g, x, y


def mod_inverse(a: int, m: int) -> int:
    """Return the inverse of ``a`` modulo ``m``, in ``[0, m)``.

    ``m = 1`` is the trivial modulus and yields 0.  Raises NotInvertible when
    ``gcd(a, m) != 1``.
    """
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return 0
    g, x, _ = ext_gcd(a % m, m)
    if g != 1:
        raise NotInvertible(f"{a} is not invertible modulo {m}")
    return x % m


@dataclass(frozen=True)
class Congruence:
    """The set of integers congruent to ``residue`` modulo ``modulus``.

    Residues are canonicalized into ``[0, modulus)`` on construction so that
    structural equality coincides with set equality.  ``modulus = 1`` encodes
    the set of all integers.
    """

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def contains(self, d: int) -> bool:
        return d % self.modulus == self.residue

    def __str__(self):
        return f"d = {self.residue} (mod {self.modulus})"


def crt_merge(c1: Congruence, c2: Congruence) -> Congruence | None:
    """Intersect two congruence classes.

    Returns the class modulo ``lcm(m1, m2)`` equal to the intersection, or
    ``None`` when the intersection is empty.  The system is solvable exactly
    when ``r1 == r2 (mod gcd(m1, m2))``; the moduli need not be coprime.
    """
    if c1.modulus == 1:
        return c2
    if c2.modulus == 1:
        return c1
    g = math.gcd(c1.modulus, c2.modulus)
    if (c1.residue - c2.residue) % g != 0:
        return None
    lcm = c1.modulus // g * c2.modulus
    step = c2.modulus // g
    k = (c2.residue - c1.residue) // g * mod_inverse(c1.modulus // g, step) % step
    return Congruence(c1.residue + c1.modulus * k, lcm)
