"""
Twist regions and Murasugi sums.

A long coherent twist region forces the first few Alexander coefficients
to increase.  The (2,n) torus knots show the threshold where the twist
region alone guarantees the whole trapezoidal shape.  The second half
splits diagrams into special alternating pieces: the figure-eight is a
plumbing of two Hopf bands, and connected sums are sums of length one.

    python3 demos/03_twists_and_plumbing.py
"""

from __future__ import annotations

from knottrap.conjectures import leading_inequalities
from knottrap.diagram import braid_closure, connected_sum, mirror, parse_braid
from knottrap.invariants import alexander_pd
from knottrap.structure import decompose_murasugi, guaranteed_prefix, is_twist_concentrated


def closure(text):
    return braid_closure(parse_braid(text))


def main():
    print("(2,n) torus links: MT - 3 >= g + |L|/2 ?")
    for n in range(3, 11):
        d = closure("2 ; " + " ".join(["1"] * n))
        tc = is_twist_concentrated(d)
        c = alexander_pd(d)
        print(f"  n={n:2}  MT={tc.MT:2}  g={tc.g}  margin={str(tc.margin):>5}  "
              f"concentrated={tc.holds!s:5}  guaranteed={guaranteed_prefix(tc.MT)}  "
              f"observed={leading_inequalities(c)}")

    trefoil = closure("2 ; 1 1 1")
    fig8 = closure("3 ; 1 -2 1 -2")
    cases = {
        "figure-eight": fig8,
        "granny knot": connected_sum(trefoil, trefoil),
        "square knot": connected_sum(trefoil, mirror(trefoil)),
        "trefoil # figure-eight": connected_sum(trefoil, fig8),
        "6_2 as a 3-braid": closure("3 ; 1 1 1 -2 1 -2"),
    }
    print("\nMurasugi decompositions")
    for name, d in cases.items():
        dec = decompose_murasugi(d)
        pieces = [str(alexander_pd(p)) for p in dec.pieces]
        print(f"  {name:24} pieces {pieces}  sum lengths {dec.lengths()}")


if __name__ == "__main__":
    main()
