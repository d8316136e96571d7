"""Tabulate the fiberwise self-covers of the parabolic unit tangent bundles.

For each of the seven orbifolds with chi = 0, print the Seifert invariant of
its unit tangent bundle, whether the bundle equals its own orientation
reversal, and the congruence class of covering degrees.
"""

from seifert import (
    Orbifold,
    allowable_degrees,
    equal,
    print_invariant,
    print_orbifold,
    projective_plane,
    reverse_orientation,
    sphere,
    unit_tangent_invariant,
)
from seifert.cli import _degree_set_str

BASES = [
    Orbifold(True, 1),
    Orbifold(False, 2),
    sphere(2, 3, 6),
    sphere(2, 4, 4),
    sphere(3, 3, 3),
    sphere(2, 2, 2, 2),
    projective_plane(2, 2),
]


def main():
    print(f"{'base':>10}  {'unit tangent bundle':<42} {'UT = -UT':<9} self-cover degrees")
    for base in BASES:
        ut = unit_tangent_invariant(base)
        symmetric = equal(ut, reverse_orientation(ut))
        print(
            f"{print_orbifold(base):>10}  {print_invariant(ut):<42} "
            f"{'yes' if symmetric else 'no':<9} {_degree_set_str(allowable_degrees(ut))}"
        )


if __name__ == "__main__":
    main()
