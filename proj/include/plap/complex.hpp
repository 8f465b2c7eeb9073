#pragma once
#include <cstdint>
#include <vector>

#include "plap/gf2.hpp"
#include "plap/graph.hpp"

namespace plap {

// Partial order on disjoint signed subsets: (a,b) precedes (a',b') when both
// components are subsets. Chains of this poset are the simplices below.
inline bool pair_leq(const SetPair& p, const SetPair& q) {
  return (p.a & ~q.a) == 0 && (p.b & ~q.b) == 0;
}

// Simplicial complex whose q-simplices are the strictly increasing chains of
// q+1 signed subsets. Storage is a prefix tree per dimension: a chain is its
// length-q prefix (parent) plus its maximal vertex (top). Vertices are sorted
// ascending by (a, b), which makes ids strictly increase along every chain,
// and the children of a common parent form one contiguous, top-sorted block.
struct OrderComplex {
  int ground = 0;              // ambient vertex count n of the underlying poset
  std::vector<SetPair> verts;  // ascending; simplex ids of dimension 0
  std::vector<std::vector<int32_t>> succ;       // per vertex: larger comparables, ascending
  std::vector<std::vector<int32_t>> succ_rank;  // per vertex: vertex id -> rank in succ, or -1
  std::vector<std::vector<int32_t>> parent;     // parent[q][s], q >= 1 (dim q-1 id)
  std::vector<std::vector<int32_t>> topv;       // topv[q][s], q >= 1 (vertex id)
  std::vector<std::vector<int32_t>> childoff;   // childoff[q][s]..[s+1]: children in dim q+1

  int dim() const { return (int)parent.size() - 1; }  // parent[0] empty placeholder
  int64_t count(int q) const {
    if (q == 0) return (int64_t)verts.size();
    return (q <= dim()) ? (int64_t)parent[q].size() : 0;
  }
  int64_t total_count() const;

  int32_t top_vertex(int q, int32_t s) const { return q == 0 ? s : topv[q][s]; }
  // Id in dim q+1 of the chain s extended by vertex w (w above top), -1 if absent.
  int32_t extend(int q, int32_t s, int32_t w) const;
  // Id in dim q-1 of the face dropping the i-th chain vertex (0 = smallest).
  int32_t face(int q, int32_t s, int i) const;
  // Writes the q+1 chain vertex ids in ascending order.
  void chain_vertices(int q, int32_t s, int32_t* out) const;

  int32_t vertex_id(const SetPair& v) const;  // -1 if absent
  int32_t antipode_vertex(int32_t v) const;   // id of the swapped pair, -1 if absent
  int32_t antipode_simplex(int q, int32_t s) const;

  // Boundary columns over dim q-1 ids, one sorted column per q-simplex.
  std::vector<SparseCol> boundary_columns(int q) const;
  // Dense form for small complexes and cross-checks.
  GF2Matrix boundary_matrix(int q) const;
};

// Builds the chain complex of the full signed-subset poset on n ground
// vertices: 3^n - 1 poset vertices, n! * 2^n maximal chains of dimension
// n-1. Default size cap 6; the override flag raises it to 7 (the largest
// size whose chain count fits in memory); beyond that a cap error is thrown.
OrderComplex build_kn(int n, bool override_cap = false);

// The subcomplex of all simplices whose vertices satisfy keep (indexed by
// vertex id of k). Chains of a sub-poset, so the same representation applies.
OrderComplex induced_subcomplex(const OrderComplex& k, const std::vector<char>& keep);

// Generic builder from an explicit vertex list (sorted internally).
OrderComplex build_complex(int ground, std::vector<SetPair> verts);

// Betti numbers over the two-element field, dimensions 0..dim.
std::vector<int64_t> betti_gf2(const OrderComplex& k);

// Closed star (simplices containing v, plus faces) and link (star minus the
// open star). Order complexes are flag complexes, so both are induced: the
// star by the comparables of v together with v, the link by the comparables.
struct StarLink {
  OrderComplex star, link;
  std::vector<char> link_keep;  // vertex-id predicate in k that induced the link
};
StarLink star_link(const OrderComplex& k, const SetPair& v);

// The fixed-point-free involution (a,b) -> (b,a), when the complex is closed
// under it on vertices (vertex-induced complexes are then closed on all
// simplices).
struct SymmetricStructure {
  bool closed = false;
  std::vector<int32_t> vert_antipode;  // per vertex id; -1 where the partner is missing
};
SymmetricStructure symmetric_structure(const OrderComplex& k);

// Quotient data of the involution: one representative per simplex orbit (the
// smaller id of the pair), boundary columns re-indexed over orbits, and the
// per-orbit index value used by the equivariant index computation. The index
// value of an orbit is 1 exactly when the sheet flags of its representative
// chain alternate, where a vertex is flagged when it is not the smaller id
// of its own vertex orbit.
struct OrbitComplex {
  std::vector<std::vector<int32_t>> reps;      // per dim: representative simplex ids
  std::vector<std::vector<int32_t>> orbit_of;  // per dim: simplex id -> orbit index
  std::vector<std::vector<SparseCol>> cols;    // per dim q>=1: boundary over orbit indices
  std::vector<std::vector<char>> nu;           // per dim: index value per orbit
};
OrbitComplex orbit_complex(const OrderComplex& k, const SymmetricStructure& s);

// Equivariant index report: index = the smallest k >= 1 whose degree-k
// index map on the quotient homology vanishes (0 for empty or non-symmetric
// input); the per-dimension quotient homology dimensions; and whether the
// index map is nonzero in each dimension.
struct YangReport {
  int index = 0;
  std::vector<int64_t> orbit_homology_dims;
  std::vector<int> nu_nonzero;
};
YangReport yang_index(const OrderComplex& k, const SymmetricStructure& s);

// Audit-only slow path: evaluates the index of an orbit cycle by the halving
// recursion (boundary of a representative half, re-expressed over orbits),
// terminating at the vertex-orbit count mod 2. Used by tests to confirm the
// alternation formula above.
int nu_recursive(const OrderComplex& k, const OrbitComplex& oc, int q, SparseCol orbit_cycle);

// Per-vertex exact values and per-simplex threshold levels for sublevel
// filtrations of k by the p=1 quotient of the graph g (which must share the
// ground vertex count). The level of a simplex is the max over its chain.
struct Valuation {
  std::vector<Rat> thresholds;              // distinct values, ascending
  std::vector<int32_t> vert_level;          // per vertex id
  std::vector<std::vector<int32_t>> level;  // per dim: per simplex
};
Valuation sublevel_valuation(const OrderComplex& k, const Graph& g);

// Shared immutable cache of the full complex per ground size (n <= 6), with
// its involution and orbit data. Built once, reused by every sweep.
struct KnCache {
  OrderComplex k;
  SymmetricStructure sym;
  OrbitComplex orbits;
};
const KnCache& kn_cache(int n);

}  // namespace plap
