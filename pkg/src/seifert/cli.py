"""Command-line front end.

One process answers one query.  Results go to stdout (human-readable by
default, machine-readable with --json); diagnostics go to stderr.  Exit
codes: 0 for any computed answer (including negative ones), 2 for parse or
validation errors, 1 for an internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import traceback

from .errors import NoHvf, SeifertError
from .hvf import (
    Covering,
    DegreeProgression,
    EmptyDegrees,
    SingleDegree,
    SurfaceSection,
    allowable_degrees,
    boundary_tangency,
    decide_hvf_boundary,
)
from .homotopy import homotopy_components
from .invariant import (
    alternate_fiberings,
    base_orbifold,
    euler_number,
    fiberwise_quotient,
)
from .lens import (
    MarkedLens,
    classify_lens,
    enumerate_lens_fiberings,
    fibered_lens_hvf,
    homeomorphic,
    lens_from_invariant,
    marked_equal,
    oriented_diffeomorphic,
)
from .notation import (
    catalog_json,
    decision_json,
    invariant_report,
    parse_invariant,
    parse_orbifold,
    print_invariant,
    print_orbifold,
    rational_str,
)
from . import orbifold as orb_mod


def _degree_set_str(ds) -> str:
    if isinstance(ds, EmptyDegrees):
        return "d = 0 only" if ds.include_zero else "none"
    if isinstance(ds, SingleDegree):
        return f"d = {ds.d}"
    assert isinstance(ds, DegreeProgression)
    text = f"d = {ds.residue} (mod {ds.modulus}), d != 0"
    if ds.include_zero:
        text += ", and d = 0"
    return text


def _mechanism_str(mech) -> str:
    if isinstance(mech, SurfaceSection):
        return "section of the fibering over the base surface"
    assert isinstance(mech, Covering)
    return (
        f"fiberwise covering of {print_invariant(mech.target)} "
        f"with degrees {_degree_set_str(mech.degrees)}"
    )


def _emit(args, payload: dict, human_lines: list[str]) -> int:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in human_lines:
            print(line)
    return 0


def _cmd_classify_orbifold(args) -> int:
    orb = parse_orbifold(args.orbifold)
    payload = {
        "input": args.orbifold,
        "orbifold": print_orbifold(orb),
        "chi": rational_str(orb_mod.chi(orb)),
        "chi_underlying": orb_mod.chi_underlying(orb),
        "geometry": None,
        "bad": None,
        "family": None,
    }
    lines = [
        f"orbifold: {payload['orbifold']}",
        f"chi: {orb_mod.chi(orb)}",
        f"underlying surface chi: {payload['chi_underlying']}",
    ]
    if orb.closed:
        geometry = orb_mod.geometry_class(orb)
        payload["geometry"] = geometry.value
        payload["bad"] = orb_mod.is_bad(orb)
        family = orb_mod.elliptic_family(orb) or orb_mod.parabolic_family(orb)
        if isinstance(family, tuple):
            payload["family"] = {"kind": family[0], "param": family[1]}
            family_text = f"{family[0]} (parameter {family[1]})"
        elif family:
            payload["family"] = {"kind": family}
            family_text = family
        else:
            family_text = "none"
        lines += [f"geometry: {geometry.value}", f"family: {family_text}"]
    else:
        lines.append("geometry: undefined (orbifold has boundary)")
    return _emit(args, payload, lines)


def _cmd_ut(args) -> int:
    orb = parse_orbifold(args.orbifold)
    inv = orb_mod.unit_tangent_invariant(orb)
    payload = {
        "input": args.orbifold,
        "orbifold": print_orbifold(orb),
        "invariant": print_invariant(inv),
        "euler_number": rational_str(euler_number(inv)),
        "chi": rational_str(orb_mod.chi(orb)),
    }
    lines = [
        f"unit tangent bundle: {payload['invariant']}",
        f"euler number: {euler_number(inv)}",
    ]
    return _emit(args, payload, lines)


def _cmd_normalize(args) -> int:
    inv = parse_invariant(args.invariant)
    from .invariant import normalize

    cf = normalize(inv)
    payload = {
        "input": args.invariant,
        "normalized_invariant": print_invariant(inv),
        "genus_code": cf.genus_code,
        "boundary_count": cf.boundary_count,
        "pairs": [list(p) for p in cf.pairs],
        "b": cf.b,
    }
    return _emit(args, payload, [payload["normalized_invariant"]])


def _cmd_euler(args) -> int:
    inv = parse_invariant(args.invariant)
    e = euler_number(inv)
    payload = {"input": args.invariant, "euler_number": rational_str(e)}
    return _emit(args, payload, [str(e)])


def _cmd_hvf(args) -> int:
    inv = parse_invariant(args.invariant)
    if not inv.closed:
        raise SeifertError("invariant has boundary; use the boundary-hvf subcommand")
    report = invariant_report(args.invariant, inv)
    lines = [
        f"invariant: {report['normalized_invariant']}",
        f"base orbifold: {report['base_orbifold']}",
        f"geometry: {report['geometry']}",
        f"euler number: {euler_number(inv)}",
        f"chi: {orb_mod.chi(base_orbifold(inv))}",
        f"horizontal vector field: {'yes' if report['hvf']['exists'] else 'no'}",
    ]
    from .hvf import decide_hvf

    decision = decide_hvf(inv)
    for mech in decision.mechanisms:
        lines.append(f"  via {_mechanism_str(mech)}")
    if decision.obstruction is not None:
        obs = report["hvf"]["obstruction"]
        if obs["kind"] == "congruence_clash":
            lines.append(
                f"  obstruction: exceptional fibers {obs['i']} and {obs['j']} "
                "impose incompatible degree congruences"
            )
        else:
            lines.append(
                f"  obstruction: no non-zero integer d with d * ({obs['euler']}) "
                f"= {obs['chi']} in the allowed congruence class"
            )
    return _emit(args, report, lines)


def _cmd_quotient(args) -> int:
    inv = parse_invariant(args.invariant)
    result = fiberwise_quotient(inv, args.degree)
    payload = {
        "input": args.invariant,
        "degree": args.degree,
        "invariant": print_invariant(result),
    }
    return _emit(args, payload, [payload["invariant"]])


def _cmd_lens(args) -> int:
    inv = parse_invariant(args.invariant)
    lens = lens_from_invariant(inv)
    payload = {
        "input": args.invariant,
        "p": lens.p,
        "q": lens.q,
        "fibered_hvf": fibered_lens_hvf(lens),
    }
    lines = [
        str(lens),
        f"horizontal vector field: {'yes' if payload['fibered_hvf'] else 'no'}",
    ]
    return _emit(args, payload, lines)


def _cmd_lens_classify(args) -> int:
    result = classify_lens(args.p, args.q)
    witness = print_invariant(result.witness) if result.witness else None
    payload = {"p": args.p, "q": args.q, "case": result.case.value, "witness": witness}
    lines = [f"case: {result.case.value}"]
    if witness:
        lines.append(f"witness: {witness}")
    return _emit(args, payload, lines)


def _cmd_lens_equal(args) -> int:
    first = MarkedLens(args.p1, args.q1)
    second = MarkedLens(args.p2, args.q2)
    relation = {
        "marked": marked_equal,
        "oriented": oriented_diffeomorphic,
        "homeo": homeomorphic,
    }[args.relation]
    verdict = relation(first, second)
    payload = {
        "relation": args.relation,
        "first": {"p": first.p, "q": first.q},
        "second": {"p": second.p, "q": second.q},
        "equal": verdict,
    }
    return _emit(args, payload, [f"equal: {'yes' if verdict else 'no'}"])


def _cmd_enumerate_lens(args) -> int:
    target = MarkedLens(args.p, args.q)
    found = enumerate_lens_fiberings(target, args.bound)
    payload = {
        "target": {"p": target.p, "q": target.q},
        "bound": args.bound,
        "fiberings": [print_invariant(inv) for inv in found],
    }
    return _emit(args, payload, payload["fiberings"] or ["(none found)"])


def _cmd_homotopy(args) -> int:
    inv = parse_invariant(args.invariant)
    payload = {
        "input": args.invariant,
        "invariant": print_invariant(inv),
        "homotopy": None,
        "note": None,
    }
    try:
        catalog = homotopy_components(inv)
    except NoHvf:
        payload["note"] = "no horizontal vector field exists"
        return _emit(args, payload, [payload["note"]])
    payload["homotopy"] = catalog_json(catalog)
    lines = [
        f"degrees: {_degree_set_str(catalog.degrees)}",
        f"cohomology rank: {catalog.cohomology_rank}",
        f"unique up to homotopy: {'yes' if catalog.unique_up_to_homotopy else 'no'}",
    ]
    return _emit(args, payload, lines)


def _cmd_boundary_hvf(args) -> int:
    inv = parse_invariant(args.invariant)
    if inv.closed:
        raise SeifertError("invariant is closed; use the hvf subcommand")
    decision = decide_hvf_boundary(inv)
    note = None
    if decision.exists:
        # one horizontal field gives infinitely many homotopy classes with
        # boundary: the degree repeats modulo the lcm of the cone orders
        note = "infinitely many homotopy classes of horizontal vector fields"
    payload = {
        "input": args.invariant,
        "normalized_invariant": print_invariant(inv),
        "base_orbifold": print_orbifold(base_orbifold(inv)),
        "hvf": decision_json(decision, allowable_degrees(inv)),
        "boundary_tangency": boundary_tangency(inv),
        "homotopy_note": note,
    }
    lines = [
        f"invariant: {payload['normalized_invariant']}",
        f"horizontal vector field: {'yes' if decision.exists else 'no'}",
    ]
    for mech in decision.mechanisms:
        lines.append(f"  via {_mechanism_str(mech)}")
    lines.append(
        "tangent/transverse to the boundary possible: "
        f"{'yes' if payload['boundary_tangency'] else 'no'}"
    )
    if note:
        lines.append(note)
    return _emit(args, payload, lines)


def _cmd_alternates(args) -> int:
    inv = parse_invariant(args.invariant)
    alternates = alternate_fiberings(inv)
    payload = {
        "input": args.invariant,
        "invariant": print_invariant(inv),
        "alternates": [
            {
                "kind": alt.kind,
                "invariant": print_invariant(alt.invariant) if alt.invariant else None,
                "note": alt.note,
            }
            for alt in alternates
        ],
    }
    if not alternates:
        lines = ["unique fibering of its manifold"]
    else:
        lines = []
        for alt in alternates:
            head = print_invariant(alt.invariant) if alt.invariant else "(family)"
            lines.append(f"{alt.kind}: {head} -- {alt.note}")
    return _emit(args, payload, lines)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seifert",
        description="Decide existence of horizontal vector fields on Seifert "
        "fiber spaces, and compute the related invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(handler=handler)
        return p

    p = add("classify-orbifold", _cmd_classify_orbifold, "geometry of an orbifold")
    p.add_argument("orbifold")
    p = add("ut", _cmd_ut, "Seifert invariant of an orbifold's unit tangent bundle")
    p.add_argument("orbifold")
    p = add("normalize", _cmd_normalize, "canonical form of a Seifert invariant")
    p.add_argument("invariant")
    p = add("euler", _cmd_euler, "Euler number of a closed fibering")
    p.add_argument("invariant")
    p = add("hvf", _cmd_hvf, "decide existence of a horizontal vector field")
    p.add_argument("invariant")
    p = add("quotient", _cmd_quotient, "fiberwise quotient by a degree")
    p.add_argument("invariant")
    p.add_argument("degree", type=int)
    p = add("lens", _cmd_lens, "marked lens space of a two-fiber invariant")
    p.add_argument("invariant")
    p = add("lens-classify", _cmd_lens_classify, "how many fiberings of L(p,q) have one")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p = add("lens-equal", _cmd_lens_equal, "compare two marked lens spaces")
    p.add_argument("p1", type=int)
    p.add_argument("q1", type=int)
    p.add_argument("p2", type=int)
    p.add_argument("q2", type=int)
    p.add_argument(
        "--relation", choices=["marked", "oriented", "homeo"], default="marked"
    )
    p = add("enumerate-lens", _cmd_enumerate_lens, "two-fiber fiberings of L(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("bound", type=int)
    p = add("homotopy", _cmd_homotopy, "homotopy classes of horizontal fields")
    p.add_argument("invariant")
    p = add("boundary-hvf", _cmd_boundary_hvf, "decision for fiberings with boundary")
    p.add_argument("invariant")
    p = add("alternates", _cmd_alternates, "other fiberings of the same manifold")
    p.add_argument("invariant")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (SeifertError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except Exception:  # pragma: no cover - internal invariant violation
        traceback.print_exc(file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
