#!/usr/bin/env python3
"""Reference oracle for exact 1-Laplacian eigenpair verification.

Certifies eigenpairs (lambda, x = 1_A - 1_B) by checking feasibility of the
edge-coupling system

    z_ij in [-1,1],  z_ij = -z_ji,  z_ij = sign(x_i - x_j) when x_i != x_j,
    sum_j z_ij  =  lambda * deg(i) * sign(x_i)     (x_i != 0)
    sum_j z_ij  in [-lambda deg(i), lambda deg(i)] (x_i == 0)

via exact rational max-flow with lower bounds, and enumerates the certified
spectrum over all signed-subset candidates.  Used to freeze expected spectra
for the C++ tests.
"""

from fractions import Fraction
from itertools import combinations
from collections import deque
import sys

from complex_oracle import Graph, path, cycle, complete, G6, kn_vertices


# ---------------------------------------------------------------------------
# exact max flow (Edmonds-Karp on Fraction capacities)

class MaxFlow:
    def __init__(self, n):
        self.n = n
        self.head = []
        self.cap = []
        self.adj = [[] for _ in range(n)]

    def add(self, u, v, c):
        self.adj[u].append(len(self.head)); self.head.append(v); self.cap.append(Fraction(c))
        self.adj[v].append(len(self.head)); self.head.append(u); self.cap.append(Fraction(0))
        return len(self.head) - 2

    def run(self, s, t):
        total = Fraction(0)
        while True:
            prev = [-1] * self.n
            prev_e = [-1] * self.n
            prev[s] = s
            q = deque([s])
            while q:
                u = q.popleft()
                if u == t:
                    break
                for e in self.adj[u]:
                    v = self.head[e]
                    if prev[v] < 0 and self.cap[e] > 0:
                        prev[v] = u
                        prev_e[v] = e
                        q.append(v)
            if prev[t] < 0:
                return total
            aug = None
            v = t
            while v != s:
                e = prev_e[v]
                aug = self.cap[e] if aug is None else min(aug, self.cap[e])
                v = prev[v]
            v = t
            while v != s:
                e = prev_e[v]
                self.cap[e] -= aug
                self.cap[e ^ 1] += aug
                v = prev[v]
            total += aug


def circulation_feasible(n_nodes, arcs, node_lo, node_hi):
    """arcs: list of (tail, head, lo, hi) with flow y_e in [lo, hi];
    per node: divergence(i) = sum(out) - sum(in) must be in [node_lo, node_hi].
    Returns witness list of y_e or None."""
    # absorb divergence intervals into arcs to a collector node
    T = n_nodes
    all_arcs = list(arcs) + [(i, T, node_lo[i], node_hi[i]) for i in range(n_nodes)]
    for (_, _, lo, hi) in all_arcs:
        if lo > hi:
            return None
    # standard lower-bound transform
    N = n_nodes + 1
    S2, T2 = N, N + 1
    mf = MaxFlow(N + 2)
    ids = []
    excess = [Fraction(0)] * N
    for (u, v, lo, hi) in all_arcs:
        ids.append(mf.add(u, v, hi - lo))
        excess[v] += lo
        excess[u] -= lo
    need = Fraction(0)
    for i in range(N):
        if excess[i] > 0:
            mf.add(S2, i, excess[i])
            need += excess[i]
        elif excess[i] < 0:
            mf.add(i, T2, -excess[i])
    got = mf.run(S2, T2)
    if got != need:
        return None
    out = []
    for k, (u, v, lo, hi) in enumerate(all_arcs):
        flow = (hi - lo) - mf.cap[ids[k]]
        out.append(lo + flow)
    return out[:len(arcs)]


# ---------------------------------------------------------------------------
# eigenpair check for x = 1_A - 1_B

def sgn(v):
    return (v > 0) - (v < 0)


def verify_pair(g, lam, x):
    """x: dict/list of Fraction values per vertex (1-based). Returns witness
    {edge: z} or None."""
    lam = Fraction(lam)
    n = g.n
    fixed = {}
    free_arcs = []   # (edge_index, tail, head) with y in [-1,1]
    base = [Fraction(0)] * (n + 1)   # contribution of fixed z to node sums
    for idx, (a, b) in enumerate(g.edges):
        d = x[a] - x[b]
        if d != 0:
            z = sgn(d)
            fixed[idx] = Fraction(z)
            base[a] += z
            base[b] -= z
        else:
            free_arcs.append((idx, a, b))
    node_lo = [Fraction(0)] * n
    node_hi = [Fraction(0)] * n
    for i in range(1, n + 1):
        if x[i] != 0:
            target = lam * g.deg[i] * sgn(x[i])
            node_lo[i - 1] = node_hi[i - 1] = target - base[i]
        else:
            w = lam * g.deg[i]
            node_lo[i - 1] = -w - base[i]
            node_hi[i - 1] = w - base[i]
    arcs = [(a - 1, b - 1, Fraction(-1), Fraction(1)) for (_, a, b) in free_arcs]
    sol = circulation_feasible(n, arcs, node_lo, node_hi)
    if sol is None:
        return None
    z = dict(fixed)
    for (k, (idx, a, b)) in enumerate(free_arcs):
        z[idx] = sol[k]
    return z


def spectrum_vertex_search(g):
    """Certified eigenvalues over all signed-subset candidates 1_A - 1_B."""
    found = {}
    for (a, b) in kn_vertices(g.n):
        lam = g.f1_pair(a, b)
        if lam in found:
            continue
        x = [Fraction(0)] * (g.n + 1)
        for i in range(1, g.n + 1):
            if a >> (i - 1) & 1:
                x[i] = Fraction(1)
            elif b >> (i - 1) & 1:
                x[i] = Fraction(-1)
        if verify_pair(g, lam, x) is not None:
            found[lam] = (a, b)
    return dict(sorted(found.items()))


def simple_nodal_edges(g):
    out = []
    for (a, b) in g.edges:
        rest = [v for v in range(1, g.n + 1) if v not in (a, b)]
        iso = any(all((min(u, v), max(u, v)) not in
                      [e for e in g.edges] or (u in (a, b))
                      for u in range(1, g.n + 1)
                      if (min(u, v), max(u, v)) in g.edges)
                  for v in rest)
        # recompute degree of v within the induced subgraph on rest
        iso = False
        restset = set(rest)
        for v in rest:
            d = sum(1 for (u, w) in g.edges
                    if (u == v and w in restset) or (w == v and u in restset))
            if d == 0:
                iso = True
                break
        if not iso:
            out.append(((a, b), Fraction(g.deg[a] + g.deg[b] - 2,
                                         g.deg[a] + g.deg[b])))
    return out


# ---------------------------------------------------------------------------

def show_spectrum(name, g):
    sp = spectrum_vertex_search(g)
    print(f"{name}: {len(sp)} certified eigenvalues")
    for lam, (a, b) in sp.items():
        A = [i for i in range(1, g.n + 1) if a >> (i - 1) & 1]
        B = [i for i in range(1, g.n + 1) if b >> (i - 1) & 1]
        print(f"  {lam}   witness A={A} B={B}")


def main():
    which = sys.argv[1] if len(sys.argv) > 1 else "all"

    if which in ("g6", "all"):
        show_spectrum("G6", G6)
        print("G6 degree sequence:", sorted((G6.deg[i] for i in range(1, 7)), reverse=True))

    if which in ("p6", "all"):
        show_spectrum("P6", path(6))

    if which in ("cycles", "all"):
        show_spectrum("C8", cycle(8))
        show_spectrum("C9", cycle(9))

    if which in ("k5", "all"):
        show_spectrum("K5", complete(5))
        show_spectrum("K4", complete(4))

    if which in ("nodal", "all"):
        for name, g in [("G6", G6), ("P6", path(6)),
                        ("fig5", Graph(6, [(1, 2), (1, 3), (1, 4), (3, 4),
                                           (2, 6), (2, 5), (5, 6)]))]:
            print(f"simple nodal edges {name}: "
                  f"{[(e, str(v)) for e, v in simple_nodal_edges(g)]}")

    if which in ("infeas", "all"):
        # a pinned infeasible instance: P6, lambda=1/4, x = 1_{1,2}
        g = path(6)
        x = [Fraction(0)] * 7
        x[1] = x[2] = Fraction(1)
        print("P6 lam=1/4 x=1_{1,2} feasible:",
              verify_pair(g, Fraction(1, 4), x) is not None)
        print("P6 lam=1/3 x=1_{1,2} feasible:",
              verify_pair(g, Fraction(1, 3), x) is not None)

    print("oracle done")


if __name__ == "__main__":
    main()
