"""Scan Seifert fiberings over elliptic orbifolds for fiberwise covers of the
unit tangent bundle, confirming that positive covering degrees never exceed
two and listing the two-fiber family where degree two occurs.
"""

import argparse
import itertools
import math

from seifert import (
    SeifertInvariant,
    SingleDegree,
    allowable_degrees,
    print_invariant,
    print_orbifold,
    projective_plane,
    sphere,
)
from seifert.invariant import base_orbifold


def elliptic_bases(max_p):
    yield sphere()
    yield projective_plane()
    for p in range(2, max_p + 1):
        yield sphere(p, p)
        yield sphere(2, 2, p)
        yield projective_plane(p)
    for q in (3, 4, 5):
        yield sphere(2, 3, q)


def invariants_over(base, b_range):
    genus = base.genus if base.orientable else -base.genus
    choices = [
        [c for c in range(1, a) if math.gcd(a, c) == 1] for a in base.cone_orders
    ]
    for betas in itertools.product(*choices):
        cones = tuple(zip(base.cone_orders, betas))
        for b in b_range:
            yield SeifertInvariant(genus, cones + ((1, b),) if b else cones)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-order", type=int, default=11)
    parser.add_argument("--b-range", type=int, default=32)
    args = parser.parse_args()

    hits = []
    scanned = 0
    for base in elliptic_bases(args.max_order):
        for inv in invariants_over(base, range(-args.b_range, args.b_range + 1)):
            scanned += 1
            degrees = allowable_degrees(inv)
            if isinstance(degrees, SingleDegree) and degrees.d > 0:
                hits.append((degrees.d, inv))
    top = max(d for d, _ in hits)
    print(f"scanned {scanned} fiberings; largest positive covering degree: {top}")
    print("\nfiberings that cover with degree 2:")
    for d, inv in hits:
        if d == 2:
            print(f"  {print_invariant(inv):<28} over {print_orbifold(base_orbifold(inv))}")


if __name__ == "__main__":
    main()
