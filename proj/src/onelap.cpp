#include "plap/onelap.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "plap/circulation.hpp"
#include "plap/errors.hpp"

namespace plap {

namespace {

int sgn(const Rat& v) { return (v > 0) - (v < 0); }

void require_size(const Graph& g, const std::vector<Rat>& x) {
  if ((int)x.size() != g.n) throw input_error("vector length does not match vertex count");
}

constexpr int kSpectrumCap = 10;            // vertices, for the 3^n - 1 scan
constexpr int64_t kPatternCap = 1'000'000;  // tie-resolution patterns per probe

// Visits every total preorder of {0..k-1} as a rank array (0 = lowest
// block). Enumerates ordered set partitions: each recursion level picks the
// next-lowest block as a nonempty subset of the remaining elements.
void for_each_weak_order(int k, int64_t& budget, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> rank(k, -1);
  std::vector<int> remaining;
  for (int i = 0; i < k; ++i) remaining.push_back(i);
  std::function<void(std::vector<int>, int)> rec = [&](std::vector<int> rest, int level) {
    if (rest.empty()) {
      if (--budget < 0) throw cap_error("tie-resolution pattern count exceeds the cap");
      visit(rank);
      return;
    }
    int m = (int)rest.size();
    for (uint32_t sub = 1; sub < (1u << m); ++sub) {
      std::vector<int> next;
      for (int b = 0; b < m; ++b) {
        if (sub & (1u << b))
          rank[rest[b]] = level;
        else
          next.push_back(rest[b]);
      }
      rec(next, level + 1);
    }
  };
  rec(remaining, 0);
}

}  // namespace

Rat f1_exact(const Graph& g, const std::vector<Rat>& x) {
  require_size(g, x);
  Rat num(0), den(0);
  for (auto [i, j] : g.edges) num += abs(x[i] - x[j]);
  for (int i = 0; i < g.n; ++i) den += g.deg[i] * abs(x[i]);
  if (den == 0) throw input_error("vector has empty weighted support");
  return num / den;
}

Zonotope delta1_image(const Graph& g, const std::vector<Rat>& x) {
  require_size(g, x);
  Zonotope z;
  z.center.assign(g.n, 0);
  for (auto [i, j] : g.edges) {
    int s = sgn(x[i] - x[j]);
    if (s == 0)
      z.generators.emplace_back(i, j);
    else {
      z.center[i] += s;
      z.center[j] -= s;
    }
  }
  return z;
}

std::optional<std::vector<Rat>> zonotope_decompose(const Zonotope& z, const std::vector<Rat>& y) {
  if (y.size() != z.center.size()) throw input_error("vector length does not match zonotope");
  CirculationProblem p;
  p.nodes = (int)z.center.size();
  for (auto [i, j] : z.generators) p.arcs.push_back(Arc{i, j, rat(-1), rat(1)});
  for (int i = 0; i < p.nodes; ++i) {
    Rat d = y[i] - z.center[i];
    p.node_lo.push_back(d);
    p.node_hi.push_back(d);
  }
  CirculationResult r = circulation_feasible(p);
  if (!r.feasible) return std::nullopt;
  return r.flow;
}

std::optional<EigenCertificate> verify_eigenpair(const Graph& g, const Rat& lambda,
                                                 const std::vector<Rat>& x) {
  require_size(g, x);
  bool nonzero = false;
  for (const Rat& v : x) nonzero = nonzero || v != 0;
  if (!nonzero) throw input_error("eigenvector must be nonzero");

  // Fixed edge values go into the balance offsets; tied edges become free
  // arcs in [-1, 1]; vertex targets are points at nonzero coordinates and
  // symmetric intervals at zeros.
  std::vector<Rat> base(g.n, Rat(0));
  CirculationProblem p;
  p.nodes = g.n;
  std::vector<int> tied_edge;  // arc index -> edge index
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [i, j] = g.edges[e];
    int s = sgn(x[i] - x[j]);
    if (s == 0) {
      tied_edge.push_back((int)e);
      p.arcs.push_back(Arc{i, j, rat(-1), rat(1)});
    } else {
      base[i] += s;
      base[j] -= s;
    }
  }
  std::vector<Rat> lo(g.n), hi(g.n);
  for (int i = 0; i < g.n; ++i) {
    Rat bound = lambda * g.deg[i];
    if (x[i] > 0)
      lo[i] = hi[i] = bound;
    else if (x[i] < 0)
      lo[i] = hi[i] = -bound;
    else {
      lo[i] = -abs(bound);
      hi[i] = abs(bound);
    }
    p.node_lo.push_back(lo[i] - base[i]);
    p.node_hi.push_back(hi[i] - base[i]);
  }
  CirculationResult r = circulation_feasible(p);
  if (!r.feasible) return std::nullopt;

  EigenCertificate cert;
  cert.lambda = lambda;
  cert.x = x;
  cert.z.assign(g.edges.size(), Rat(0));
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [i, j] = g.edges[e];
    cert.z[e] = Rat(sgn(x[i] - x[j]));
  }
  for (size_t a = 0; a < tied_edge.size(); ++a) cert.z[tied_edge[a]] = r.flow[a];
  cert.balance.resize(g.n);
  for (int i = 0; i < g.n; ++i) cert.balance[i] = VertexBalance{base[i], lo[i], hi[i]};
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [i, j] = g.edges[e];
    if (sgn(x[i] - x[j]) == 0) {
      cert.balance[i].sum += cert.z[e];
      cert.balance[j].sum -= cert.z[e];
    }
  }
  return cert;
}

bool certificate_valid(const Graph& g, const EigenCertificate& cert) {
  if ((int)cert.x.size() != g.n || cert.z.size() != g.edges.size()) return false;
  std::vector<Rat> sum(g.n, Rat(0));
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [i, j] = g.edges[e];
    int s = sgn(cert.x[i] - cert.x[j]);
    if (s != 0 && cert.z[e] != s) return false;
    if (s == 0 && (cert.z[e] < -1 || cert.z[e] > 1)) return false;
    sum[i] += cert.z[e];
    sum[j] -= cert.z[e];
  }
  for (int i = 0; i < g.n; ++i) {
    Rat bound = cert.lambda * g.deg[i];
    int s = sgn(cert.x[i]);
    if (s != 0) {
      if (sum[i] != s * bound) return false;
    } else {
      if (sum[i] < -abs(bound) || sum[i] > abs(bound)) return false;
    }
    if (cert.balance[i].sum != sum[i]) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> simple_nodal_sets(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : g.edges) {
    VertexSet removed = (1u << i) | (1u << j);
    bool ok = true;
    for (int k = 0; k < g.n && ok; ++k) {
      if (removed & (1u << k)) continue;
      if ((g.adj[k] & ~removed) == 0) ok = false;
    }
    if (ok) out.emplace_back(i, j);
  }
  return out;
}

std::vector<SpectrumEntry> enumerate_delta1_spectrum(const Graph& g) {
  if (g.n > kSpectrumCap)
    throw cap_error("signed-indicator scan capped at " + std::to_string(kSpectrumCap) +
                    " vertices");
  std::map<Rat, SetPair> found;
  const uint32_t all = g.full_set();
  for (uint32_t a = 0; a <= all; ++a) {
    const uint32_t m = ~a & all;
    for (uint32_t b = m;; b = (b - 1) & m) {
      if ((a | b) != 0 && volume(g, a | b) > 0) {
        SetPair pair{a, b};
        Rat lam = f1_pair(g, pair);
        if (!found.count(lam) && verify_eigenpair(g, lam, indicator_vector(g, pair)))
          found.emplace(lam, pair);
      }
      if (b == 0) break;
    }
  }
  std::vector<SpectrumEntry> out;
  for (auto& [value, witness] : found) out.push_back(SpectrumEntry{value, witness});
  return out;
}

Rat critical_best_slack(const Graph& g, const std::vector<Rat>& x, const std::vector<Rat>& y,
                        const Rat& lambda, int64_t* patterns) {
  require_size(g, x);
  require_size(g, y);

  Rat total(0);
  // Contributions independent of the resolution: edges split by x and the
  // vertex terms at nonzero coordinates.
  for (auto [i, j] : g.edges) {
    int s = sgn(x[i] - x[j]);
    if (s != 0) total += s * (y[i] - y[j]);
  }
  for (int i = 0; i < g.n; ++i)
    if (x[i] != 0) total -= lambda * g.deg[i] * sgn(x[i]) * y[i];

  // Group the remaining terms by the level sets of x. Within a level only
  // the relative order of the members (and, on the zero level, the anchor 0)
  // matters, and only members with a visible term need ranking.
  std::map<Rat, std::vector<int>> levels;
  for (int i = 0; i < g.n; ++i) levels[x[i]].push_back(i);
  int64_t budget = kPatternCap;
  int64_t used = 0;
  for (auto& [value, verts] : levels) {
    const bool zero = value == 0;
    std::vector<std::pair<int, int>> tied;
    for (auto [i, j] : g.edges)
      if (x[i] == value && x[j] == value && y[i] != y[j]) tied.emplace_back(i, j);
    std::vector<int> elems;  // local index -> vertex; anchor appended last
    std::vector<int> local(g.n, -1);
    auto touch = [&](int v) {
      if (local[v] < 0) {
        local[v] = (int)elems.size();
        elems.push_back(v);
      }
    };
    for (auto [i, j] : tied) {
      touch(i);
      touch(j);
    }
    if (zero)
      for (int v : verts)
        if (y[v] != 0) touch(v);
    if (elems.empty()) continue;
    int anchor = -1;
    int k = (int)elems.size();
    if (zero) anchor = k++;

    std::optional<Rat> best;
    int64_t before = budget;
    for_each_weak_order(k, budget, [&](const std::vector<int>& rank) {
      Rat s(0);
      for (auto [i, j] : tied) {
        int d = rank[local[i]] - rank[local[j]];
        if (d != 0)
          s += (d > 0 ? 1 : -1) * (y[i] - y[j]);
        else
          s += abs(y[i] - y[j]);
      }
      if (zero) {
        for (int li = 0; li < (int)elems.size(); ++li) {
          int v = elems[li];
          if (y[v] == 0) continue;
          int d = rank[li] - rank[anchor];
          if (d != 0)
            s -= lambda * g.deg[v] * (d > 0 ? 1 : -1) * y[v];
          else
            s -= lambda * g.deg[v] * abs(y[v]);
        }
      }
      if (!best || s > *best) best = s;
    });
    used += before - budget;
    total += *best;
  }
  if (patterns) *patterns += used;
  return total;
}

CriticalReport is_critical_f1(const Graph& g, const std::vector<Rat>& x) {
  CriticalReport rep;
  rep.lambda = f1_exact(g, x);

  // Probe directions: signed singletons, signed pairs, then a fixed batch of
  // seeded pseudo-random integer vectors.
  std::vector<std::vector<Rat>> dirs;
  for (int i = 0; i < g.n; ++i)
    for (int s : {1, -1}) {
      std::vector<Rat> y(g.n, Rat(0));
      y[i] = s;
      dirs.push_back(std::move(y));
    }
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          std::vector<Rat> y(g.n, Rat(0));
          y[i] = si;
          y[j] = sj;
          dirs.push_back(std::move(y));
        }
  std::mt19937 rng(0x1F2E3D4C);
  std::uniform_int_distribution<int> coord(-9, 9);
  for (int d = 0; d < 64; ++d) {
    std::vector<Rat> y(g.n);
    bool nz = false;
    for (int i = 0; i < g.n; ++i) {
      y[i] = coord(rng);
      nz = nz || y[i] != 0;
    }
    if (!nz) y[0] = 1;
    dirs.push_back(std::move(y));
  }

  bool first = true;
  for (auto& y : dirs) {
    Rat s = critical_best_slack(g, x, y, rep.lambda, &rep.patterns);
    if (first || s < rep.slack) {
      rep.slack = s;
      rep.direction = y;
      first = false;
    }
    if (rep.slack < 0) break;  // witness found; criticality is refuted
  }
  rep.critical = rep.slack >= 0;
  return rep;
}

int distinct_count_lower_bound(const Graph& g) {
  std::map<int, char> sums;
  for (auto [i, j] : simple_nodal_sets(g)) sums[g.deg[i] + g.deg[j]] = 1;
  return 2 + (int)sums.size();
}

}  // namespace plap
