"""Tabulate, for every lens space L(p, q) with p up to a bound, how many of
its Seifert fiberings carry a horizontal vector field, next to the counts
found by brute-force enumeration of two-fiber invariants.
"""

import argparse
import math

from seifert import (
    MarkedLens,
    SeifertInvariant,
    classify_lens,
    decide_hvf,
    enumerate_lens_fiberings,
    mod_inverse,
    print_invariant,
)


def manifold_markings(p, q):
    qs = {q % p, (-q) % p} if p else {1}
    if p > 2:
        inv_q = mod_inverse(q, p)
        qs |= {inv_q, (-inv_q) % p}
    return sorted({(s * p, qq) for s in (1, -1) for qq in qs})


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-p", type=int, default=12)
    parser.add_argument("--bound", type=int, default=8, help="enumeration bound")
    args = parser.parse_args()

    print(f"{'L(p,q)':>8}  {'verdict':<15} {'with':>5} {'without':>8}  witness")
    for p in range(args.max_p + 1):
        for q in range(p) if p else (1,):
            if math.gcd(p, q) != 1:
                continue
            verdict = classify_lens(p, q)
            fiberings = []
            for pp, qq in manifold_markings(p, q):
                fiberings.extend(enumerate_lens_fiberings(MarkedLens(pp, qq), args.bound))
            for alpha in range(1, p // 4 + 1):
                if 4 * alpha == p and q % p in ((2 * alpha + 1) % p, (2 * alpha - 1) % p):
                    fiberings.append(SeifertInvariant(-1, ((alpha, -1),)))
            with_hvf = sum(decide_hvf(f).exists for f in fiberings)
            witness = print_invariant(verdict.witness) if verdict.witness else ""
            print(
                f"L({p},{q})".rjust(8)
                + f"  {verdict.case.value:<15} {with_hvf:>5} "
                + f"{len(fiberings) - with_hvf:>8}  {witness}"
            )


if __name__ == "__main__":
    main()
