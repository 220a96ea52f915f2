#!/usr/bin/env python3
"""Explore what happens to the map-space collapses over even moduli.

The verification suite refuses even moduli because every argument divides by 2
somewhere.  The constructions themselves still run, so this script measures
the solution modules there and reports - it asserts nothing, by design.

Observed at desk scale: the Jordan module is strictly larger than the
derivation module once 2-torsion appears, so the hypothesis is genuinely
load-bearing, not bureaucratic.

Usage:
    python scripts/even_modulus_exploration.py [--moduli 2,4,6,8]
"""

from __future__ import annotations

import argparse
import sys

from derivlab.identities import check, maps_from_module, solve_all
from derivlab.linalg import module_equal
from derivlab.rings import matrix_ring, zmod


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--moduli", default="2,4,6",
                        help="comma-separated even moduli to explore")
    parser.add_argument("--n", type=int, default=2)
    args = parser.parse_args(argv)

    moduli = [int(v) for v in args.moduli.split(",")]
    print(f"{'m':>3s} {'jordan':>10s} {'derivation':>10s} {'equal':>5s} "
          f"{'jordan_gen_fails_derivation':>27s}")
    for m in moduli:
        ring = matrix_ring(args.n, zmod(m))
        jordan = solve_all("jordan", ring)
        deriv = solve_all("derivation", ring)
        equal = module_equal(jordan, deriv)
        witnesses = 0
        example = None
        for gen in maps_from_module(jordan, ring, ring):
            rep = check(gen, "derivation")
            if not rep.passed:
                witnesses += 1
                example = example or rep
        print(f"{m:3d} {jordan.size():10d} {deriv.size():10d} {str(equal):>5s} "
              f"{witnesses:27d}")
        if example is not None:
            w = example.witness
            print(f"     e.g. Jordan-but-not-derivation witness pair: "
                  f"a={w.a}, b={w.b}, residual={list(w.residual)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
