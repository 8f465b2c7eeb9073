#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "plap/catalog.hpp"
#include "plap/complex.hpp"

using namespace plap;

namespace {

VertexSet mask(std::initializer_list<int> one_based) {
  VertexSet s = 0;
  for (int v : one_based) s |= 1u << (v - 1);
  return s;
}

std::vector<int32_t> chain_of(const OrderComplex& k, int q, int32_t s) {
  std::vector<int32_t> ch(q + 1);
  k.chain_vertices(q, s, ch.data());
  return ch;
}

int64_t euler_from_counts(const OrderComplex& k) {
  int64_t e = 0;
  for (int q = 0; q <= k.dim(); ++q) e += (q % 2 == 0 ? 1 : -1) * k.count(q);
  return e;
}

int64_t euler_from_betti(const std::vector<int64_t>& b) {
  int64_t e = 0;
  for (size_t q = 0; q < b.size(); ++q) e += (q % 2 == 0 ? 1 : -1) * b[q];
  return e;
}

}  // namespace

TEST_CASE("full signed-subset complexes, small sizes") {
  OrderComplex k1 = build_kn(1);
  CHECK(k1.count(0) == 2);
  CHECK(k1.dim() == 0);
  CHECK(betti_gf2(k1) == std::vector<int64_t>{2});

  OrderComplex k2 = build_kn(2);
  CHECK(k2.count(0) == 8);
  CHECK(k2.count(1) == 8);
  CHECK(k2.dim() == 1);
  CHECK(betti_gf2(k2) == std::vector<int64_t>{1, 1});

  OrderComplex k3 = build_kn(3);
  CHECK(k3.count(0) == 26);
  CHECK(k3.count(1) == 72);
  CHECK(k3.count(2) == 48);
  CHECK(k3.dim() == 2);
  CHECK(betti_gf2(k3) == std::vector<int64_t>{1, 0, 1});

  OrderComplex k4 = build_kn(4);
  CHECK(k4.count(0) == 80);
  CHECK(k4.count(3) == 384);
  CHECK(k4.total_count() == 1696);
  CHECK(betti_gf2(k4) == std::vector<int64_t>{1, 0, 0, 1});

  for (const OrderComplex* k : {&k2, &k3, &k4})
    CHECK(euler_from_counts(*k) == euler_from_betti(betti_gf2(*k)));
}

TEST_CASE("large complex census") {
  OrderComplex k5 = build_kn(5);
  CHECK(k5.count(0) == 242);
  CHECK(k5.count(4) == 3840);
  CHECK(k5.total_count() == 24482);

  const OrderComplex& k6 = kn_cache(6).k;
  CHECK(k6.count(0) == 728);
  CHECK(k6.count(1) == 14168);
  CHECK(k6.count(2) == 72960);
  CHECK(k6.count(3) == 151680);
  CHECK(k6.count(4) == 138240);
  CHECK(k6.count(5) == 46080);
  CHECK(k6.total_count() == 423856);
}

TEST_CASE("caps and vertex validation") {
  CHECK_THROWS_AS(build_kn(0), input_error);
  CHECK_THROWS_AS(build_kn(7), cap_error);
  CHECK_THROWS_AS(build_kn(8, true), cap_error);
  CHECK_THROWS_AS(build_complex(3, {{mask({1, 2}), mask({2})}}), input_error);
  CHECK_THROWS_AS(build_complex(3, {{0, 0}}), input_error);
  CHECK_THROWS_AS(build_complex(2, {{mask({3}), 0}}), input_error);
}

TEST_CASE("chain navigation") {
  OrderComplex k = build_kn(3);
  for (int q = 1; q <= k.dim(); ++q) {
    for (int32_t s = 0; s < k.count(q); ++s) {
      auto ch = chain_of(k, q, s);
      for (int i = 0; i + 1 <= q; ++i) {
        CHECK(ch[i] < ch[i + 1]);
        CHECK(pair_leq(k.verts[ch[i]], k.verts[ch[i + 1]]));
      }
      CHECK(k.top_vertex(q, s) == ch[q]);
      CHECK(k.extend(q - 1, k.parent[q][s], k.topv[q][s]) == s);
      for (int i = 0; i <= q; ++i) {
        int32_t f = k.face(q, s, i);
        auto fch = chain_of(k, q - 1, f);
        auto expect = ch;
        expect.erase(expect.begin() + i);
        CHECK(fch == expect);
      }
    }
  }
  for (int32_t v = 0; v < k.count(0); ++v) CHECK(k.vertex_id(k.verts[v]) == v);
  CHECK(k.vertex_id({mask({1}), mask({2, 3})}) >= 0);
  OrderComplex k2 = build_kn(2);
  CHECK(k2.vertex_id({mask({1}), mask({2})}) >= 0);
}

TEST_CASE("boundary operators square to zero") {
  OrderComplex k = build_kn(3);
  for (int q = 1; q + 1 <= k.dim(); ++q) {
    GF2Matrix lo = k.boundary_matrix(q), hi = k.boundary_matrix(q + 1);
    CHECK(lo.multiply(hi).is_zero());
  }
  // Sparse and dense forms agree.
  for (int q = 1; q <= k.dim(); ++q) {
    auto cols = k.boundary_columns(q);
    GF2Matrix m = k.boundary_matrix(q);
    for (size_t s = 0; s < cols.size(); ++s) {
      int on = 0;
      for (int r = 0; r < m.rows; ++r) on += m.get(r, (int)s) ? 1 : 0;
      CHECK(on == (int)cols[s].size());
      for (int32_t r : cols[s]) CHECK(m.get(r, (int)s));
    }
  }
}

TEST_CASE("induced subcomplexes") {
  OrderComplex k3 = build_kn(3);
  std::vector<char> all(k3.verts.size(), 1);
  OrderComplex same = induced_subcomplex(k3, all);
  CHECK(same.total_count() == k3.total_count());

  std::vector<char> singletons(k3.verts.size(), 0);
  for (size_t v = 0; v < k3.verts.size(); ++v)
    if (set_size(k3.verts[v].a | k3.verts[v].b) == 1) singletons[v] = 1;
  OrderComplex pts = induced_subcomplex(k3, singletons);
  CHECK(pts.count(0) == 6);
  CHECK(pts.dim() == 0);
  CHECK(betti_gf2(pts) == std::vector<int64_t>{6});

  CHECK_THROWS_AS(induced_subcomplex(k3, std::vector<char>(3, 1)), input_error);
}

TEST_CASE("star and link") {
  OrderComplex k3 = build_kn(3);
  StarLink sl = star_link(k3, {mask({1, 2, 3}), 0});
  CHECK(sl.link.count(0) == 6);
  CHECK(betti_gf2(sl.link) == std::vector<int64_t>{1, 1});
  CHECK(betti_gf2(sl.star) == std::vector<int64_t>{1, 0, 0});
  CHECK_THROWS_AS(star_link(k3, {mask({1}), mask({1})}), input_error);
}

TEST_CASE("antipode structure") {
  OrderComplex k = build_kn(4);
  SymmetricStructure sym = symmetric_structure(k);
  CHECK(sym.closed);
  for (int q = 0; q <= k.dim(); ++q) {
    for (int32_t s = 0; s < k.count(q); ++s) {
      int32_t a = k.antipode_simplex(q, s);
      REQUIRE(a >= 0);
      CHECK(a != s);
      CHECK(k.antipode_simplex(q, a) == s);
      auto ch = chain_of(k, q, s), ach = chain_of(k, q, a);
      std::set<int32_t> overlap;
      std::set_intersection(ch.begin(), ch.end(), ach.begin(), ach.end(),
                            std::inserter(overlap, overlap.begin()));
      CHECK(overlap.empty());
    }
  }

  // Removing one half of a vertex orbit breaks closure.
  std::vector<char> keep(k.verts.size(), 1);
  keep[k.vertex_id({mask({1}), 0})] = 0;
  OrderComplex broken = induced_subcomplex(k, keep);
  CHECK(!symmetric_structure(broken).closed);
}

TEST_CASE("orbit complex structure") {
  OrderComplex k = build_kn(4);
  SymmetricStructure sym = symmetric_structure(k);
  OrbitComplex oc = orbit_complex(k, sym);
  for (int q = 0; q <= k.dim(); ++q) {
    CHECK((int64_t)oc.reps[q].size() * 2 == k.count(q));
    for (int32_t s = 0; s < k.count(q); ++s) CHECK(oc.orbit_of[q][s] >= 0);
  }
  for (char v : oc.nu[0]) CHECK(v == 1);
  for (int q = 1; q <= k.dim(); ++q) {
    for (const auto& col : oc.cols[q]) {
      CHECK((int)col.size() == q + 1);
      CHECK(std::adjacent_find(col.begin(), col.end()) == col.end());
    }
  }
  // The orbit boundary squares to zero.
  for (int q = 2; q <= k.dim(); ++q) {
    for (const auto& col : oc.cols[q]) {
      SparseCol acc;
      for (int32_t o : col) acc = sparse_xor(acc, oc.cols[q - 1][o]);
      CHECK(acc.empty());
    }
  }
}

TEST_CASE("representative flip leaves orbit index values unchanged") {
  OrderComplex k = build_kn(4);
  SymmetricStructure sym = symmetric_structure(k);
  OrbitComplex oc = orbit_complex(k, sym);
  for (int q = 0; q <= k.dim(); ++q) {
    for (size_t o = 0; o < oc.reps[q].size(); ++o) {
      int32_t other = k.antipode_simplex(q, oc.reps[q][o]);
      auto ch = chain_of(k, q, other);
      bool alt = true;
      for (int i = 0; i + 1 <= q; ++i) {
        bool a = ch[i] > sym.vert_antipode[ch[i]];
        bool b = ch[i + 1] > sym.vert_antipode[ch[i + 1]];
        if (a == b) alt = false;
      }
      CHECK((int)oc.nu[q][o] == (alt ? 1 : 0));
    }
  }
}

TEST_CASE("halving recursion matches the alternation formula") {
  for (int n : {2, 3}) {
    OrderComplex k = build_kn(n);
    SymmetricStructure sym = symmetric_structure(k);
    OrbitComplex oc = orbit_complex(k, sym);
    for (int q = 1; q <= k.dim(); ++q) {
      auto kernel = sparse_kernel_basis(oc.cols[q]);
      CHECK(!kernel.empty());
      for (const auto& z : kernel) {
        int direct = 0;
        for (int32_t o : z) direct ^= oc.nu[q][o];
        CHECK(nu_recursive(k, oc, q, z) == direct);
      }
    }
  }
}

TEST_CASE("equivariant index of spheres") {
  for (int n = 1; n <= 5; ++n) {
    OrderComplex k = build_kn(n);
    SymmetricStructure sym = symmetric_structure(k);
    YangReport rep = yang_index(k, sym);
    CHECK(rep.index == n);
    REQUIRE((int)rep.orbit_homology_dims.size() == n);
    for (int q = 0; q < n; ++q) {
      CHECK(rep.orbit_homology_dims[q] == 1);
      CHECK(rep.nu_nonzero[q] == 1);
    }
  }
  // Empty and non-symmetric inputs have index zero.
  OrderComplex empty;
  CHECK(yang_index(empty, symmetric_structure(empty)).index == 0);
  OrderComplex k2 = build_kn(2);
  std::vector<char> keep(k2.verts.size(), 1);
  keep[k2.vertex_id({mask({1}), 0})] = 0;
  OrderComplex broken = induced_subcomplex(k2, keep);
  CHECK(yang_index(broken, symmetric_structure(broken)).index == 0);
}

TEST_CASE("index is monotone along nested symmetric subcomplexes") {
  Graph p4 = path_graph(4);
  const KnCache& cache = kn_cache(4);
  Valuation val = sublevel_valuation(cache.k, p4);
  int prev = 0;
  for (int32_t t = 0; t < (int32_t)val.thresholds.size(); ++t) {
    std::vector<char> keep(cache.k.verts.size(), 0);
    for (size_t v = 0; v < keep.size(); ++v) keep[v] = val.vert_level[v] <= t;
    OrderComplex sub = induced_subcomplex(cache.k, keep);
    SymmetricStructure sym = symmetric_structure(sub);
    CHECK(sym.closed);
    YangReport rep = yang_index(sub, sym);
    CHECK(rep.index >= prev);
    prev = rep.index;
  }
  CHECK(prev == 4);
}

TEST_CASE("sublevel valuation") {
  Graph g6 = catalog_graph_or_throw("g6");
  const KnCache& cache = kn_cache(6);
  Valuation val = sublevel_valuation(cache.k, g6);

  for (size_t i = 0; i + 1 < val.thresholds.size(); ++i)
    CHECK(val.thresholds[i] < val.thresholds[i + 1]);
  for (const Rat& v : {rat(0), rat(2, 5), rat(5, 9), rat(3, 5), rat(2, 3), rat(5, 7),
                       rat(3, 4), rat(7, 9), rat(1)})
    CHECK(std::binary_search(val.thresholds.begin(), val.thresholds.end(), v));

  for (int32_t v = 0; v < cache.k.count(0); v += 37)
    CHECK(f1_pair(g6, cache.k.verts[v]) == val.thresholds[val.vert_level[v]]);

  for (int q = 1; q <= cache.k.dim(); ++q) {
    for (int32_t s = 0; s < cache.k.count(q); s += 997) {
      CHECK(val.level[q][s] >= val.level[q - 1][cache.k.parent[q][s]]);
      auto ch = chain_of(cache.k, q, s);
      int32_t mx = 0;
      for (int32_t v : ch) mx = std::max(mx, val.vert_level[v]);
      CHECK(val.level[q][s] == mx);
    }
  }

  CHECK_THROWS_AS(sublevel_valuation(build_kn(4), g6), input_error);
}

TEST_CASE("two-component strict sublevel link") {
  Graph g6 = catalog_graph_or_throw("g6");
  const KnCache& cache = kn_cache(6);
  StarLink sl = star_link(cache.k, {mask({2, 5, 6}), 0});
  CHECK(sl.link.count(0) == 32);
  CHECK(betti_gf2(sl.link) == std::vector<int64_t>{1, 0, 0, 0, 1});

  const Rat bound = rat(5, 9);
  std::vector<char> keep(sl.link.verts.size(), 0);
  for (size_t v = 0; v < keep.size(); ++v)
    keep[v] = f1_pair(g6, sl.link.verts[v]) < bound;
  OrderComplex strict = induced_subcomplex(sl.link, keep);
  auto betti = betti_gf2(strict);
  REQUIRE(!betti.empty());
  CHECK(betti[0] == 2);
}

TEST_CASE("equivariant index at six ground vertices") {
  const KnCache& cache = kn_cache(6);
  YangReport rep = yang_index(cache.k, cache.sym);
  CHECK(rep.index == 6);
  for (int q = 0; q < 6; ++q) CHECK(rep.orbit_homology_dims[q] == 1);
}

TEST_CASE("cache identity") {
  const KnCache& a = kn_cache(3);
  const KnCache& b = kn_cache(3);
  CHECK(&a == &b);
}
