#!/usr/bin/env python3
"""Reference oracle for the homological spectrum: at each distinct vertex
value c of F_1 on the signed-subset complex, compare the GF(2) Betti vectors
of the strict (<c) and closed (<=c) sublevel subcomplexes.  c is homological
iff they differ.  Brute force, exact fractions, independent of the C++ code.
"""

from fractions import Fraction
import sys

from complex_oracle import Graph, path, cycle, kn_vertices, kn_complex


T5 = Graph(5, [(1, 3), (1, 2), (2, 3), (3, 4), (4, 5)])


def pad(b, dim):
    return b + [0] * (dim - len(b))


def homological_spectrum(g, verbose=True):
    n = g.n
    vals = sorted({g.f1_pair(a, b) for (a, b) in kn_vertices(n)})
    out = []
    for c in vals:
        strict = kn_complex(n, keep=lambda v: g.f1_pair(*v) < c)
        closed = kn_complex(n, keep=lambda v: g.f1_pair(*v) <= c)
        bs = pad(strict.betti() if strict.verts else [], n)
        bc = pad(closed.betti() if closed.verts else [], n)
        hom = bs != bc
        out.append((c, bs, bc, hom))
        if verbose:
            print(f"  {str(c):>6}: strict={bs} closed={bc} homological={hom}")
    return out


def main():
    which = sys.argv[1] if len(sys.argv) > 1 else "all"

    if which in ("p4", "all"):
        print("== P4 homological spectrum ==")
        homological_spectrum(path(4))

    if which in ("c4", "all"):
        print("== C4 homological spectrum ==")
        homological_spectrum(cycle(4))

    if which in ("t5", "all"):
        print("== T5 (triangle+tail) homological spectrum ==")
        homological_spectrum(T5)

    print("oracle done")


if __name__ == "__main__":
    main()
