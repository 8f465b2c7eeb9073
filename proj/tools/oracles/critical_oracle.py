#!/usr/bin/env3 python3
"""Reference oracle for the metric-slope criticality test of F_1.

A point x with lambda = F_1(x) is critical iff for every direction y there
is a tie-resolution xi with

    Phi(x, xi, y) >= lambda * Psi(x, xi, y),

where Phi sums, over edges:   sign(x_i - x_j) (y_i - y_j)      if x_i != x_j
                              sign(xi_i - xi_j)(y_i - y_j)     if tied, xi_i != xi_j
                              |y_i - y_j|                      if tied, xi_i == xi_j
and Psi sums, over vertices:  deg(i) sign(x_i) y_i             if x_i != 0
                              deg(i) sign(xi_i) y_i            if x_i == 0, xi_i != 0
                              deg(i) |y_i|                     if x_i == 0, xi_i == 0.

Only the rank order of xi within each level set of x matters (plus the
comparison against 0 on the zero level), so the max over xi is a finite max
over total preorders per level.  Exact fractions throughout.
"""

from fractions import Fraction
from itertools import product
import sys

from complex_oracle import Graph, path


def weak_orders(elems):
    """All total preorders on elems as rank dicts (0 = lowest)."""
    if not elems:
        yield {}
        return
    # enumerate ordered set partitions
    def rec(rest, blocks):
        if not rest:
            yield [list(b) for b in blocks]
            return
        x = rest[0]
        for i in range(len(blocks)):
            blocks[i].append(x)
            yield from rec(rest[1:], blocks)
            blocks[i].pop()
        for i in range(len(blocks) + 1):
            blocks.insert(i, [x])
            yield from rec(rest[1:], blocks)
            del blocks[i]
    seen = set()
    for part in rec(list(elems), []):
        key = tuple(tuple(sorted(b, key=str)) for b in part)
        if key in seen:
            continue
        seen.add(key)
        yield {v: r for r, b in enumerate(part) for v in b}


def sgn(v):
    return (v > 0) - (v < 0)


def best_slack(g, x, y, lam):
    """max over xi of Phi - lam*Psi, decomposed per level set of x."""
    levels = {}
    for i in range(1, g.n + 1):
        levels.setdefault(x[i], []).append(i)
    total = Fraction(0)
    # cross-level edges and nonzero-vertex Psi terms are xi-independent
    for (a, b) in g.edges:
        if x[a] != x[b]:
            total += sgn(x[a] - x[b]) * (y[a] - y[b])
    for i in range(1, g.n + 1):
        if x[i] != 0:
            total -= lam * g.deg[i] * sgn(x[i]) * y[i]
    for val, verts in levels.items():
        edges_in = [(a, b) for (a, b) in g.edges
                    if x[a] == val and x[b] == val]
        zero = (val == 0)
        if not edges_in and not zero:
            continue
        elems = list(verts) + (["_zero_"] if zero else [])
        best = None
        for rank in weak_orders(elems):
            s = Fraction(0)
            for (a, b) in edges_in:
                if rank[a] != rank[b]:
                    s += sgn(rank[a] - rank[b]) * (y[a] - y[b])
                else:
                    s += abs(y[a] - y[b])
            if zero:
                r0 = rank["_zero_"]
                for i in verts:
                    if rank[i] != r0:
                        s -= lam * g.deg[i] * sgn(rank[i] - r0) * y[i]
                    else:
                        s -= lam * g.deg[i] * abs(y[i])
            if best is None or s > best:
                best = s
        total += best
    return total


def direction_family(n):
    for i in range(1, n + 1):
        for si in (1, -1):
            y = [Fraction(0)] * (n + 1)
            y[i] = Fraction(si)
            yield y
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for si in (1, -1):
                for sj in (1, -1):
                    y = [Fraction(0)] * (n + 1)
                    y[i], y[j] = Fraction(si), Fraction(sj)
                    yield y


def f1(g, x):
    num = sum(abs(x[a] - x[b]) for (a, b) in g.edges)
    den = sum(g.deg[i] * abs(x[i]) for i in range(1, g.n + 1))
    return Fraction(num, den)


def is_critical(g, x):
    lam = f1(g, x)
    worst = None
    witness = None
    for y in direction_family(g.n):
        s = best_slack(g, x, y, lam)
        if worst is None or s < worst:
            worst, witness = s, list(y)
        if s < 0:
            return False, lam, s, y
    return True, lam, worst, witness


FIG5 = Graph(6, [(1, 2), (1, 3), (1, 4), (3, 4), (2, 6), (2, 5), (5, 6)])


def main():
    x = [Fraction(0)] * 7
    x[3] = x[4] = Fraction(1)
    ok, lam, slack, y = is_critical(FIG5, x)
    print(f"fig5 1_{{3,4}}: critical={ok} lambda={lam} worst_slack={slack} at y={y[1:]}")

    x = [Fraction(0)] * 7
    x[3] = x[4] = Fraction(1)
    x[5] = x[6] = Fraction(-1)
    ok, lam, slack, y = is_critical(FIG5, x)
    print(f"fig5 1_{{3,4}}-1_{{5,6}}: critical={ok} lambda={lam} slack={slack} at y={y[1:]}")

    # sanity: constant vector is critical with lambda 0 on any graph
    g = path(4)
    x = [Fraction(1)] * 5
    x[0] = Fraction(0)
    ok, lam, slack, y = is_critical(g, x)
    print(f"P4 constant: critical={ok} lambda={lam}")


if __name__ == "__main__":
    main()
