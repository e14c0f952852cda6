"""
Three independent routes to the Alexander polynomial.

For each braid below we close it up, then compute Delta from a minor of
the Fox matrix of the PD code, from the reduced Burau matrix, and from the
Conway skein relation.  All three must agree up to units.  The signature
comes from a Goeritz matrix.

    python3 demos/01_alexander_three_ways.py
"""

from __future__ import annotations

from knottrap.diagram import braid_closure, parse_braid
from knottrap.invariants import (alexander_burau, alexander_pd, conway_skein, conway_to_alexander,
                                 genus_alternating, signature)
from knottrap.polyalg import normalize_alexander

BRAIDS = {
    "trefoil": "2 ; 1 1 1",
    "figure-eight": "3 ; 1 -2 1 -2",
    "Hopf link": "2 ; 1 1",
    "(2,5) torus knot": "2 ; 1 1 1 1 1",
    "6_2 as a 3-braid": "3 ; 1 1 1 -2 1 -2",
    "Borromean rings": "3 ; 1 -2 1 -2 1 -2",
}


def main():
    print(f"{'link':20} {'PD':>18} {'Burau':>18} {'skein':>18} {'sigma':>6} {'g':>3}")
    for name, text in BRAIDS.items():
        b = parse_braid(text)
        d = braid_closure(b)
        pd = alexander_pd(d)
        burau = alexander_burau(b)
        skein = normalize_alexander(conway_to_alexander(conway_skein(d)))
        assert pd.coeffs == burau.coeffs == skein.coeffs
        g = genus_alternating(d, pd)[0].g
        print(f"{name:20} {str(pd):>18} {str(burau):>18} {str(skein):>18} {signature(d).sigma:>6} {g:>3}")


if __name__ == "__main__":
    main()
