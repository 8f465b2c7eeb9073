#include "plap/circulation.hpp"

#include <deque>

namespace plap {
namespace {

// Exact max-flow on rational capacities; paired forward/backward edge slots.
struct MaxFlow {
  int n;
  std::vector<int> head;
  std::vector<Rat> cap;
  std::vector<std::vector<int>> adj;

  explicit MaxFlow(int nodes) : n(nodes), adj(nodes) {}

  int add(int u, int v, Rat c) {
    adj[u].push_back((int)head.size());
    head.push_back(v);
    cap.push_back(std::move(c));
    adj[v].push_back((int)head.size());
    head.push_back(u);
    cap.push_back(Rat(0));
    return (int)head.size() - 2;
  }

  Rat run(int s, int t) {
    Rat total(0);
    std::vector<int> prev(n), prev_e(n);
    for (;;) {
      std::fill(prev.begin(), prev.end(), -1);
      prev[s] = s;
      std::deque<int> q{s};
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        if (u == t) break;
        for (int e : adj[u]) {
          int v = head[e];
          if (prev[v] < 0 && cap[e] > 0) {
            prev[v] = u;
            prev_e[v] = e;
            q.push_back(v);
          }
        }
      }
      if (prev[t] < 0) return total;
      Rat aug = cap[prev_e[t]];
      for (int v = prev[t]; v != s; v = prev[v])
        if (cap[prev_e[v]] < aug) aug = cap[prev_e[v]];
      for (int v = t; v != s; v = prev[v]) {
        int e = prev_e[v];
        cap[e] -= aug;
        cap[e ^ 1] += aug;
      }
      total += aug;
    }
  }
};

}  // namespace

CirculationResult circulation_feasible(const CirculationProblem& p) {
  CirculationResult res;
  if ((int)p.node_lo.size() != p.nodes || (int)p.node_hi.size() != p.nodes)
    throw input_error("circulation: node interval count mismatch");
  for (const Arc& a : p.arcs) {
    if (a.tail < 0 || a.tail >= p.nodes || a.head < 0 || a.head >= p.nodes)
      throw input_error("circulation: arc endpoint out of range");
    if (a.lo > a.hi) return res;
  }
  for (int i = 0; i < p.nodes; ++i)
    if (p.node_lo[i] > p.node_hi[i]) return res;

  // Divergence intervals become arcs out of a collector node: balancing node
  // i in the augmented graph forces the collector arc to carry exactly the
  // divergence of i in the original graph, so its bounds are the interval.
  int collector = p.nodes;
  std::vector<Arc> all = p.arcs;
  for (int i = 0; i < p.nodes; ++i)
    all.push_back(Arc{collector, i, p.node_lo[i], p.node_hi[i]});

  // Lower-bound transform: y = lo + g with g in [0, hi - lo]; the shifted
  // excess is routed from a super-source to a super-sink and must saturate.
  int n_aug = p.nodes + 1;
  int s2 = n_aug, t2 = n_aug + 1;
  MaxFlow mf(n_aug + 2);
  std::vector<int> edge_id(all.size());
  std::vector<Rat> excess(n_aug, Rat(0));
  for (size_t k = 0; k < all.size(); ++k) {
    const Arc& a = all[k];
    edge_id[k] = mf.add(a.tail, a.head, a.hi - a.lo);
    excess[a.head] += a.lo;
    excess[a.tail] -= a.lo;
  }
  Rat need(0);
  for (int i = 0; i < n_aug; ++i) {
    if (excess[i] > 0) {
      mf.add(s2, i, excess[i]);
      need += excess[i];
    } else if (excess[i] < 0) {
      mf.add(i, t2, -excess[i]);
    }
  }
  if (mf.run(s2, t2) != need) return res;

  res.feasible = true;
  res.flow.reserve(p.arcs.size());
  for (size_t k = 0; k < p.arcs.size(); ++k) {
    const Arc& a = all[k];
    res.flow.push_back(a.lo + (a.hi - a.lo) - mf.cap[edge_id[k]]);
  }
  return res;
}

}  // namespace plap
