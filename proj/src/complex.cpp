#include "plap/complex.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "plap/errors.hpp"

namespace plap {

namespace {

// XOR-accumulate a sorted id list: ids appearing an even number of times drop out.
SparseCol xor_fold(std::vector<int32_t> ids) {
  std::sort(ids.begin(), ids.end());
  SparseCol out;
  for (size_t i = 0; i < ids.size();) {
    size_t j = i;
    while (j < ids.size() && ids[j] == ids[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(ids[i]);
    i = j;
  }
  return out;
}

}  // namespace

int64_t OrderComplex::total_count() const {
  int64_t t = 0;
  for (int q = 0; q <= dim(); ++q) t += count(q);
  return t;
}

int32_t OrderComplex::extend(int q, int32_t s, int32_t w) const {
  if (q + 1 > dim()) return -1;
  int32_t top = top_vertex(q, s);
  int32_t r = succ_rank[top][w];
  if (r < 0) return -1;
  return childoff[q][s] + r;
}

int32_t OrderComplex::face(int q, int32_t s, int i) const {
  if (i == q) return parent[q][s];
  if (q == 1) return topv[1][s];
  return extend(q - 2, face(q - 1, parent[q][s], i), topv[q][s]);
}

void OrderComplex::chain_vertices(int q, int32_t s, int32_t* out) const {
  int32_t cur = s;
  for (int k = q; k >= 1; --k) {
    out[k] = topv[k][cur];
    cur = parent[k][cur];
  }
  out[0] = cur;
}

int32_t OrderComplex::vertex_id(const SetPair& v) const {
  auto it = std::lower_bound(verts.begin(), verts.end(), v);
  if (it == verts.end() || !(*it == v)) return -1;
  return (int32_t)(it - verts.begin());
}

int32_t OrderComplex::antipode_vertex(int32_t v) const {
  return vertex_id(SetPair{verts[v].b, verts[v].a});
}

int32_t OrderComplex::antipode_simplex(int q, int32_t s) const {
  std::vector<int32_t> ch((size_t)q + 1);
  chain_vertices(q, s, ch.data());
  // The involution preserves the partial order, and ids ascend along every
  // chain, so the image vertices are already in ascending id order.
  int32_t cur = antipode_vertex(ch[0]);
  if (cur < 0) return -1;
  for (int k = 1; k <= q; ++k) {
    int32_t w = antipode_vertex(ch[k]);
    if (w < 0) return -1;
    cur = extend(k - 1, cur, w);
    if (cur < 0) return -1;
  }
  return cur;
}

std::vector<SparseCol> OrderComplex::boundary_columns(int q) const {
  if (q < 1 || q > dim()) throw input_error("boundary dimension out of range");
  std::vector<SparseCol> cols(count(q));
  for (int64_t s = 0; s < count(q); ++s) {
    SparseCol col((size_t)q + 1);
    for (int i = 0; i <= q; ++i) col[i] = face(q, (int32_t)s, i);
    std::sort(col.begin(), col.end());
    cols[s] = std::move(col);
  }
  return cols;
}

GF2Matrix OrderComplex::boundary_matrix(int q) const {
  GF2Matrix m((int)count(q - 1), (int)count(q));
  auto cols = boundary_columns(q);
  for (size_t s = 0; s < cols.size(); ++s)
    for (int32_t r : cols[s]) m.set(r, (int)s, true);
  return m;
}

OrderComplex build_complex(int ground, std::vector<SetPair> verts) {
  if (ground < 0 || ground > kMaxVertices) throw input_error("ground size out of range");
  const VertexSet all = ground == 0 ? 0u : ((1u << ground) - 1u);
  for (const auto& v : verts) {
    if ((v.a & v.b) != 0) throw input_error("signed set with overlapping parts");
    if ((v.a | v.b) == 0) throw input_error("empty signed set");
    if (((v.a | v.b) & ~all) != 0) throw input_error("signed set exceeds ground set");
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  OrderComplex k;
  k.ground = ground;
  k.verts = std::move(verts);
  const int32_t nv = (int32_t)k.verts.size();
  if (nv == 0) return k;

  k.succ.resize(nv);
  k.succ_rank.assign(nv, std::vector<int32_t>(nv, -1));
  for (int32_t v = 0; v < nv; ++v)
    for (int32_t w = v + 1; w < nv; ++w)
      if (pair_leq(k.verts[v], k.verts[w])) {
        k.succ_rank[v][w] = (int32_t)k.succ[v].size();
        k.succ[v].push_back(w);
      }

  // Dimension 0 in place; grow one dimension at a time. The children of a
  // chain are exactly its top vertex's successors, appended in succ order.
  k.parent.emplace_back();
  k.topv.emplace_back();
  std::vector<int32_t> tops(nv);
  for (int32_t v = 0; v < nv; ++v) tops[v] = v;
  int q = 0;
  while (true) {
    int64_t cnt = k.count(q);
    std::vector<int32_t> offs((size_t)cnt + 1, 0);
    for (int64_t s = 0; s < cnt; ++s)
      offs[s + 1] = offs[s] + (int32_t)k.succ[tops[s]].size();
    int64_t next = offs[cnt];
    if (next == 0) break;
    k.childoff.push_back(std::move(offs));
    std::vector<int32_t> np((size_t)next), nt((size_t)next), ntops((size_t)next);
    for (int64_t s = 0; s < cnt; ++s) {
      int64_t base = k.childoff[q][s];
      const auto& sc = k.succ[tops[s]];
      for (size_t r = 0; r < sc.size(); ++r) {
        np[base + r] = (int32_t)s;
        nt[base + r] = sc[r];
        ntops[base + r] = sc[r];
      }
    }
    k.parent.push_back(std::move(np));
    k.topv.push_back(std::move(nt));
    tops = std::move(ntops);
    ++q;
  }
  return k;
}

OrderComplex build_kn(int n, bool override_cap) {
  if (n < 1) throw input_error("ground size must be positive");
  const int cap = override_cap ? 7 : 6;
  if (n > cap)
    throw cap_error("full signed-subset complex capped at " + std::to_string(cap) +
                    " ground vertices (3^n - 1 poset vertices, n! * 2^n maximal chains)");
  std::vector<SetPair> verts;
  const uint32_t all = (1u << n) - 1u;
  for (uint32_t a = 0; a <= all; ++a) {
    const uint32_t m = ~a & all;
    for (uint32_t b = m;; b = (b - 1) & m) {
      if ((a | b) != 0) verts.push_back(SetPair{a, b});
      if (b == 0) break;
    }
  }
  return build_complex(n, std::move(verts));
}

OrderComplex induced_subcomplex(const OrderComplex& k, const std::vector<char>& keep) {
  if (keep.size() != k.verts.size()) throw input_error("keep mask size mismatch");
  std::vector<SetPair> verts;
  for (size_t v = 0; v < keep.size(); ++v)
    if (keep[v]) verts.push_back(k.verts[v]);
  return build_complex(k.ground, std::move(verts));
}

std::vector<int64_t> betti_gf2(const OrderComplex& k) {
  if (k.verts.empty()) return {};
  std::vector<int64_t> betti(k.dim() + 1);
  std::vector<int64_t> rank(k.dim() + 2, 0);
  for (int q = 1; q <= k.dim(); ++q) rank[q] = sparse_rank(k.boundary_columns(q));
  for (int q = 0; q <= k.dim(); ++q) betti[q] = k.count(q) - rank[q] - rank[q + 1];
  return betti;
}

StarLink star_link(const OrderComplex& k, const SetPair& v) {
  int32_t vid = k.vertex_id(v);
  if (vid < 0) throw input_error("star vertex not in complex");
  StarLink sl;
  std::vector<char> keep_star(k.verts.size(), 0);
  sl.link_keep.assign(k.verts.size(), 0);
  for (int32_t w = 0; w < (int32_t)k.verts.size(); ++w) {
    if (w == vid) continue;
    if (pair_leq(k.verts[vid], k.verts[w]) || pair_leq(k.verts[w], k.verts[vid]))
      sl.link_keep[w] = keep_star[w] = 1;
  }
  keep_star[vid] = 1;
  sl.star = induced_subcomplex(k, keep_star);
  sl.link = induced_subcomplex(k, sl.link_keep);
  return sl;
}

SymmetricStructure symmetric_structure(const OrderComplex& k) {
  SymmetricStructure s;
  s.vert_antipode.resize(k.verts.size());
  s.closed = true;
  for (int32_t v = 0; v < (int32_t)k.verts.size(); ++v) {
    s.vert_antipode[v] = k.antipode_vertex(v);
    if (s.vert_antipode[v] < 0) s.closed = false;
  }
  return s;
}

OrbitComplex orbit_complex(const OrderComplex& k, const SymmetricStructure& s) {
  if (!s.closed) throw input_error("complex is not closed under the involution");
  OrbitComplex oc;
  if (k.verts.empty()) return oc;
  const int d = k.dim();
  oc.reps.resize(d + 1);
  oc.orbit_of.resize(d + 1);
  oc.cols.resize(d + 1);
  oc.nu.resize(d + 1);

  // Simplex antipodes dimension by dimension: the image of a chain is the
  // image of its parent extended by the image of its top vertex (the
  // involution preserves the order, and ids ascend along chains, so the
  // image of a chain's top is the image chain's top).
  const std::vector<int32_t>& ant = s.vert_antipode;
  std::vector<int32_t> chain((size_t)d + 1);
  std::vector<int32_t> prev_aq;
  for (int q = 0; q <= d; ++q) {
    const int64_t cnt = k.count(q);
    std::vector<int32_t> aq((size_t)cnt);
    if (q == 0) {
      for (int64_t v = 0; v < cnt; ++v) aq[v] = ant[v];
    } else {
      for (int64_t x = 0; x < cnt; ++x)
        aq[x] = k.extend(q - 1, prev_aq[k.parent[q][x]], ant[k.topv[q][x]]);
    }

    oc.orbit_of[q].assign((size_t)cnt, -1);
    for (int64_t x = 0; x < cnt; ++x) {
      if (aq[x] == x) throw input_error("involution has a fixed simplex");
      if (x < aq[x]) {
        int32_t o = (int32_t)oc.reps[q].size();
        oc.reps[q].push_back((int32_t)x);
        oc.orbit_of[q][x] = o;
        oc.orbit_of[q][aq[x]] = o;
      }
    }

    if (q >= 1) {
      oc.cols[q].resize(oc.reps[q].size());
      for (size_t o = 0; o < oc.reps[q].size(); ++o) {
        int32_t r = oc.reps[q][o];
        SparseCol col((size_t)q + 1);
        for (int i = 0; i <= q; ++i) col[i] = oc.orbit_of[q - 1][k.face(q, r, i)];
        std::sort(col.begin(), col.end());
        oc.cols[q][o] = std::move(col);
      }
    }

    // Index value of an orbit: 1 exactly when the sheet flags of the
    // representative chain alternate. A vertex is flagged when its id
    // exceeds its partner's.
    oc.nu[q].resize(oc.reps[q].size());
    for (size_t o = 0; o < oc.reps[q].size(); ++o) {
      k.chain_vertices(q, oc.reps[q][o], chain.data());
      bool alt = true;
      bool prev = chain[0] > ant[chain[0]];
      for (int i = 1; i <= q; ++i) {
        bool cur = chain[i] > ant[chain[i]];
        if (cur == prev) {
          alt = false;
          break;
        }
        prev = cur;
      }
      oc.nu[q][o] = alt ? 1 : 0;
    }
    prev_aq = std::move(aq);
  }
  return oc;
}

YangReport yang_index(const OrderComplex& k, const SymmetricStructure& s) {
  YangReport rep;
  if (k.verts.empty() || !s.closed) return rep;
  OrbitComplex oc = orbit_complex(k, s);
  const int d = k.dim();
  rep.orbit_homology_dims.assign(d + 1, 0);
  rep.nu_nonzero.assign(d + 1, 0);

  // Per dimension, one column reduction of the orbit boundary augmented with
  // a sentinel row 0 recording the index value (real rows shifted up by one).
  // A column reducing to the sentinel alone is a cycle with index value 1;
  // pivots at positive rows count the plain boundary rank.
  std::vector<int64_t> rank(d + 2, 0);
  for (int q = 0; q <= d; ++q) {
    const size_t norb = oc.reps[q].size();
    std::unordered_map<int32_t, size_t> owner;
    std::vector<SparseCol> work(norb);
    bool hit = false;
    int64_t rk = 0;
    for (size_t c = 0; c < norb; ++c) {
      SparseCol col;
      if (q >= 1)
        for (int32_t r : oc.cols[q][c]) col.push_back(r + 1);
      if (oc.nu[q][c]) col.insert(col.begin(), 0);
      while (!col.empty()) {
        auto it = owner.find(col.back());
        if (it == owner.end()) break;
        col = sparse_xor(col, work[it->second]);
      }
      if (col.empty()) continue;
      if (col.back() == 0) {
        hit = true;
        // Keep it as pivot-0 owner so later sentinel-only columns cancel.
      } else {
        ++rk;
      }
      owner.emplace(col.back(), c);
      work[c] = std::move(col);
    }
    rank[q] = rk;
    rep.nu_nonzero[q] = hit ? 1 : 0;
  }
  for (int q = 0; q <= d; ++q)
    rep.orbit_homology_dims[q] = (int64_t)oc.reps[q].size() - rank[q] - rank[q + 1];

  rep.index = d + 1;
  for (int q = 1; q <= d; ++q) {
    bool nonzero = rep.nu_nonzero[q] != 0;
    if (!nonzero) {
      rep.index = q;
      break;
    }
  }
  // A one-point-pair complex has dimension 0; its index is 1, which the
  // dim+1 default already gives.
  return rep;
}

int nu_recursive(const OrderComplex& k, const OrbitComplex& oc, int q, SparseCol orbit_cycle) {
  while (q >= 1) {
    // Lift one sheet per orbit and take its boundary in the double cover.
    std::vector<int32_t> faces;
    for (int32_t o : orbit_cycle) {
      int32_t r = oc.reps[q][o];
      for (int i = 0; i <= q; ++i) faces.push_back(k.face(q, r, i));
    }
    SparseCol chain = xor_fold(std::move(faces));
    // For a cycle downstairs, that boundary is a sum of full orbits (both
    // sheets of each); descend with one coefficient per such orbit.
    std::vector<int32_t> orbits;
    for (int32_t sid : chain) orbits.push_back(oc.orbit_of[q - 1][sid]);
    std::sort(orbits.begin(), orbits.end());
    SparseCol next;
    for (size_t i = 0; i < orbits.size();) {
      size_t j = i;
      while (j < orbits.size() && orbits[j] == orbits[i]) ++j;
      if (j - i != 2) throw input_error("halving recursion requires a cycle");
      next.push_back(orbits[i]);
      i = j;
    }
    orbit_cycle = std::move(next);
    --q;
  }
  return (int)(orbit_cycle.size() % 2);
}

Valuation sublevel_valuation(const OrderComplex& k, const Graph& g) {
  if (g.n != k.ground) throw input_error("graph and complex ground sizes differ");
  Valuation val;
  if (k.verts.empty()) return val;
  std::vector<Rat> vv(k.verts.size());
  std::map<Rat, int32_t> idx;
  for (size_t v = 0; v < k.verts.size(); ++v) {
    vv[v] = f1_pair(g, k.verts[v]);
    idx.emplace(vv[v], 0);
  }
  int32_t t = 0;
  for (auto& [value, i] : idx) {
    i = t++;
    val.thresholds.push_back(value);
  }
  val.vert_level.resize(k.verts.size());
  for (size_t v = 0; v < k.verts.size(); ++v) val.vert_level[v] = idx[vv[v]];
  val.level.resize(k.dim() + 1);
  val.level[0] = val.vert_level;
  for (int q = 1; q <= k.dim(); ++q) {
    val.level[q].resize(k.count(q));
    for (int64_t s = 0; s < k.count(q); ++s)
      val.level[q][s] =
          std::max(val.level[q - 1][k.parent[q][s]], val.vert_level[k.topv[q][s]]);
  }
  return val;
}

const KnCache& kn_cache(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<KnCache>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto entry = std::make_unique<KnCache>();
    entry->k = build_kn(n);
    entry->sym = symmetric_structure(entry->k);
    entry->orbits = orbit_complex(entry->k, entry->sym);
    it = cache.emplace(n, std::move(entry)).first;
  }
  return *it->second;
}

}  // namespace plap
