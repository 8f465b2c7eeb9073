#!/usr/bin/env python3
"""Reference oracle for combinatorial Cheeger-type quantities:
multi-way constants h_k, subpartition bound h_*(P) with c(P), clique
pseudo-independence alpha_*, and the p in {1,2} sandwich
(2^{p-1}/p^p) hhat_k^p <= lambda_k(D_p) <= 2^{p-1} hhat_k
on small random graphs (hhat computed by the index sweep for n <= 4).
"""

from fractions import Fraction
from itertools import combinations
import random
import sys

from complex_oracle import (Graph, path, cycle, complete, G6,
                            minmax_delta1, multiway_cheeger)
import numpy as np


def hstar(g, blocks):
    """min over nonempty A hitting each block at most once of |bd A|/vol A."""
    best = None
    choices = [[None] + list(b) for b in blocks]
    def rec(i, mask):
        nonlocal best
        if i == len(choices):
            if mask:
                r = Fraction(g.boundary_size(mask), g.volume(mask))
                if best is None or r < best:
                    best = r
            return
        for pick in choices[i]:
            rec(i + 1, mask | (1 << (pick - 1)) if pick else mask)
    rec(0, 0)
    return best


def c_of_partition(blocks):
    return sum(1 if len(b) <= 2 else 2 for b in blocks)


def is_clique(g, b):
    return all(tuple(sorted(e)) in set(g.edges) for e in combinations(b, 2))


def blocks_nonadjacent(g, blocks):
    es = set(g.edges)
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            for u in blocks[i]:
                for v in blocks[j]:
                    if tuple(sorted((u, v))) in es:
                        return False
    return True


def alpha_star(g):
    """max c(P) over subpartitions into pairwise-nonadjacent cliques."""
    verts = list(range(1, g.n + 1))
    best = 0
    # enumerate families of disjoint cliques with no cross edges, DFS
    cliques = [list(c) for r in range(1, g.n + 1)
               for c in combinations(verts, r) if is_clique(g, c)]
    def rec(start, used, blocks):
        nonlocal best
        best = max(best, c_of_partition(blocks))
        for idx in range(start, len(cliques)):
            c = cliques[idx]
            if any(v in used for v in c):
                continue
            if not blocks_nonadjacent(g, blocks + [c]):
                continue
            rec(idx + 1, used | set(c), blocks + [c])
    rec(0, set(), [])
    return best


def normalized_spectrum(g):
    n = g.n
    A = np.zeros((n, n))
    for (a, b) in g.edges:
        A[a - 1, b - 1] = A[b - 1, a - 1] = 1.0
    d = A.sum(axis=1)
    L = np.eye(n) - np.diag(1 / np.sqrt(d)) @ A @ np.diag(1 / np.sqrt(d))
    return np.sort(np.linalg.eigvalsh(L))


def random_connected(rng, n):
    while True:
        edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                 if rng.random() < 0.55]
        if not edges:
            continue
        g = Graph(n, edges)
        if any(g.deg[i] == 0 for i in range(1, n + 1)):
            continue
        adj = {i: set() for i in range(1, n + 1)}
        for (a, b) in edges:
            adj[a].add(b); adj[b].add(a)
        seen, stack = {1}, [1]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v); stack.append(v)
        if len(seen) == n:
            return g


def main():
    which = sys.argv[1] if len(sys.argv) > 1 else "all"

    if which in ("g6", "all"):
        print("== G6 multiway Cheeger ==")
        for k in range(1, 7):
            print(f"  h_{k} = {multiway_cheeger(G6, k)}")
        P = [[2, 3, 4], [1, 5, 6]]
        print(f"  cliques: {is_clique(G6, P[0])}, {is_clique(G6, P[1])}")
        print(f"  h_*(P) for P={{2,3,4}},{{1,5,6}}: {hstar(G6, P)}  c(P)={c_of_partition(P)}")
        print(f"  alpha_*(G6) = {alpha_star(G6)}")

    if which in ("p6", "all"):
        print("== P6 ==")
        for k in range(1, 7):
            print(f"  h_{k} = {multiway_cheeger(path(6), k)}")
        print(f"  alpha_*(P6) = {alpha_star(path(6))}")

    if which in ("sandwich", "all"):
        print("== sandwich on random graphs n<=4 (hhat via index sweep) ==")
        rng = random.Random(0x1F2E3D4C)
        for t in range(12):
            n = rng.choice([3, 4])
            g = random_connected(rng, n)
            lam1 = minmax_delta1(g)
            hk = [multiway_cheeger(g, k) for k in range(1, n + 1)]
            lam2 = normalized_spectrum(g)
            ok = True
            for k in range(n):
                hh = lam1[k]
                ok &= hh <= hk[k]
                # p=2: hhat^2/2 <= lam <= 2 hhat
                ok &= float(hh) ** 2 / 2 <= lam2[k] + 1e-9
                ok &= lam2[k] <= 2 * float(hh) + 1e-9
            ok &= lam1[1] == hk[1]
            print(f"  n={n} edges={g.edges} hhat={[str(x) for x in lam1]} "
                  f"h={[str(x) for x in hk]} ok={ok}")
            assert ok

    print("oracle done")


if __name__ == "__main__":
    main()
