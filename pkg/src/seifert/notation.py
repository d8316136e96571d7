"""Parsing and printing of orbifold and Seifert-invariant notation, plus the
machine-readable report schema.

Orbifold grammar (whitespace-separated tokens):

    "2 3 7"     sphere with cone points of orders 2, 3 and 7
    "2 3 o o"   genus-two orientable surface with cone points 2 and 3
    "2 2 x"     projective plane with two cone points of order 2
    "b2"        annulus (sphere with two boundary circles)

``o`` adds a handle, ``x`` a cross cap, ``bN`` declares N boundary circles
(at most one ``b`` token, N >= 1), and a positive integer adds a cone point
(order 1 is allowed and dropped).  A mix of k >= 1 cross caps and h handles
is the non-orientable surface of genus k + 2h.  The bare sphere prints as
``1``.

Invariant grammar:

    M(g; (a1,b1), (a2,b2), ...)        closed, genus code g
    M(g, n; (a1,b1), ...)              n boundary circles

The leading ``M`` is optional on input.  Printing always emits the canonical
form: betas reduced into [0, alpha), pairs sorted, and (for closed
invariants) the accumulated integer pair ``(1, b)`` first when b != 0.

The JSON report schema is documented in the README; its field names are a
frozen contract.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import NoHvf, NotALensForm, ParseError
from .hvf import (
    Covering,
    CongruenceClash,
    DegreeSet,
    EmptyDegrees,
    EulerMismatch,
    HvfDecision,
    SingleDegree,
    SurfaceSection,
    decide_hvf,
    decide_hvf_boundary,
)
from .homotopy import ComponentCatalog, homotopy_components
from .invariant import SeifertInvariant, base_orbifold, euler_number, normalize
from .lens import MarkedLens, fibered_lens_hvf, lens_from_invariant
from . import orbifold as orb_mod

__all__ = [
    "parse_orbifold",
    "print_orbifold",
    "parse_invariant",
    "print_invariant",
    "rational_str",
    "degree_set_json",
    "decision_json",
    "catalog_json",
    "lens_json",
    "invariant_report",
]


# ---------------------------------------------------------------- orbifolds

_BOUNDARY_TOKEN = re.compile(r"b(\d+)\Z")


def parse_orbifold(text: str) -> "orb_mod.Orbifold":
    """Parse orbifold notation; ParseError carries the character offset."""
    handles = 0
    crosscaps = 0
    cones: list[int] = []
    boundary: int | None = None
    matches = list(re.finditer(r"\S+", text))
    if not matches:
        raise ParseError("empty orbifold description", 0)
    for m in matches:
        token, pos = m.group(), m.start()
        if token == "o":
            handles += 1
        elif token == "x":
            crosscaps += 1
        elif token.isdigit():
            if int(token) == 0:
                raise ParseError("cone order must be positive", pos)
            cones.append(int(token))
        elif _BOUNDARY_TOKEN.fullmatch(token):
            if boundary is not None:
                raise ParseError("more than one boundary token", pos)
            boundary = int(token[1:])
            if boundary == 0:
                raise ParseError("boundary count must be positive (omit b0)", pos)
        else:
            raise ParseError(f"unrecognized token {token!r}", pos)
    if crosscaps:
        # h handles on a non-orientable surface amount to 2h extra cross caps
        return orb_mod.Orbifold(False, crosscaps + 2 * handles, tuple(cones), boundary or 0)
    return orb_mod.Orbifold(True, handles, tuple(cones), boundary or 0)


def print_orbifold(orb) -> str:
    """Canonical notation: sorted cone orders, then o/x tokens, then bN."""
    parts = [str(a) for a in orb.cone_orders]
    parts += (["o"] if orb.orientable else ["x"]) * orb.genus
    if orb.boundary_count:
        parts.append(f"b{orb.boundary_count}")
    return " ".join(parts) if parts else "1"


# ---------------------------------------------------------------- invariants


class _Scanner:
    _INT = re.compile(r"-?\d+")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_space(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str):
        self._skip_space()
        if self.pos >= len(self.text) or self.text[self.pos] != char:
            raise ParseError(f"expected {char!r}", self.pos)
        self.pos += 1

    def integer(self) -> int:
        self._skip_space()
        m = self._INT.match(self.text, self.pos)
        if not m:
            raise ParseError("expected an integer", self.pos)
        self.pos = m.end()
        return int(m.group())

    def end(self):
        self._skip_space()
        if self.pos < len(self.text):
            raise ParseError("trailing input", self.pos)


def parse_invariant(text: str) -> SeifertInvariant:
    """Parse ``M(g; (a,b), ...)`` or ``M(g, n; ...)``; the M is optional.

    Structural problems raise ParseError with a position; a pair with
    gcd(a, b) > 1 raises NotCoprime with the pair's index.
    """
    s = _Scanner(text)
    if s.peek() == "M":
        s.pos += 1
    s.expect("(")
    genus_code = s.integer()
    boundary = 0
    if s.peek() == ",":
        s.expect(",")
        at = s.pos
        boundary = s.integer()
        if boundary < 0:
            raise ParseError("boundary count must be non-negative", at)
    s.expect(";")
    pairs = []
    while s.peek() != ")":
        if pairs:
            s.expect(",")
        s.expect("(")
        at = s.pos
        a = s.integer()
        if a < 1:
            raise ParseError("alpha must be a positive integer", at)
        s.expect(",")
        b = s.integer()
        s.expect(")")
        pairs.append((a, b))
    s.expect(")")
    s.end()
    return SeifertInvariant(genus_code, tuple(pairs), boundary)


def print_invariant(inv: SeifertInvariant) -> str:
    """Canonical notation for the fibering (normalizes first)."""
    cf = normalize(inv)
    rep = cf.invariant()
    head = f"M({rep.genus_code};" if rep.closed else f"M({rep.genus_code}, {rep.boundary_count};"
    if not rep.pairs:
        return head + ")"
    return head + " " + ", ".join(f"({a},{b})" for a, b in rep.pairs) + ")"


# ------------------------------------------------------------------- reports


def rational_str(x: Fraction) -> str:
    """Exact rationals are serialized as "numerator/denominator"."""
    return f"{x.numerator}/{x.denominator}"


def degree_set_json(ds: DegreeSet) -> dict:
    if isinstance(ds, EmptyDegrees):
        return {"kind": "empty", "include_zero": ds.include_zero}
    if isinstance(ds, SingleDegree):
        return {"kind": "single", "d": ds.d}
    return {
        "kind": "progression",
        "residue": ds.residue,
        "modulus": ds.modulus,
        "include_zero": ds.include_zero,
    }


def _mechanism_json(mech) -> dict:
    if isinstance(mech, SurfaceSection):
        return {"kind": "surface_section"}
    assert isinstance(mech, Covering)
    return {
        "kind": "covering",
        "degrees": degree_set_json(mech.degrees),
        "target": print_invariant(mech.target),
    }


def _obstruction_json(obs) -> dict | None:
    if obs is None:
        return None
    if isinstance(obs, CongruenceClash):
        return {"kind": "congruence_clash", "i": obs.i, "j": obs.j}
    assert isinstance(obs, EulerMismatch)
    return {
        "kind": "euler_mismatch",
        "euler": rational_str(obs.euler),
        "chi": rational_str(obs.chi),
        "pin": obs.pin,
    }


def decision_json(decision: HvfDecision, degrees: DegreeSet) -> dict:
    target = None
    for mech in decision.mechanisms:
        if isinstance(mech, Covering):
            target = print_invariant(mech.target)
    return {
        "exists": decision.exists,
        "mechanisms": [_mechanism_json(m) for m in decision.mechanisms],
        "degrees": degree_set_json(degrees),
        "target": target,
        "obstruction": _obstruction_json(decision.obstruction),
    }


def catalog_json(catalog: ComponentCatalog) -> dict:
    return {
        "degrees": degree_set_json(catalog.degrees),
        "cohomology_rank": catalog.cohomology_rank,
        "unique_up_to_homotopy": catalog.unique_up_to_homotopy,
    }


def lens_json(lens: MarkedLens) -> dict:
    return {"p": lens.p, "q": lens.q, "fibered_hvf": fibered_lens_hvf(lens)}


def invariant_report(text: str, inv: SeifertInvariant) -> dict:
    """The full structured report for one invariant.

    Field names are frozen: input, normalized_invariant, base_orbifold,
    geometry, euler_number, chi, hvf, and the optional lens and homotopy
    sections.  Bounded invariants have null geometry and euler_number.
    """
    from .hvf import allowable_degrees

    base = base_orbifold(inv)
    if inv.closed:
        geometry = orb_mod.geometry_class(base).value
        euler = rational_str(euler_number(inv))
        decision = decide_hvf(inv)
    else:
        geometry = None
        euler = None
        decision = decide_hvf_boundary(inv)
    report = {
        "input": text,
        "normalized_invariant": print_invariant(inv),
        "base_orbifold": print_orbifold(base),
        "geometry": geometry,
        "euler_number": euler,
        "chi": rational_str(orb_mod.chi(base)),
        "hvf": decision_json(decision, allowable_degrees(inv)),
    }
    if inv.closed:
        try:
            report["lens"] = lens_json(lens_from_invariant(inv))
        except NotALensForm:
            pass
        if inv.genus_code >= 0:
            try:
                report["homotopy"] = catalog_json(homotopy_components(inv))
            except NoHvf:
                pass
    return report
