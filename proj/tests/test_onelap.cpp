#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "plap/catalog.hpp"
#include "plap/onelap.hpp"

using namespace plap;

namespace {

VertexSet mask(std::initializer_list<int> one_based) {
  VertexSet s = 0;
  for (int v : one_based) s |= 1u << (v - 1);
  return s;
}

std::vector<Rat> vec(const Graph& g, std::initializer_list<int> pos,
                     std::initializer_list<int> neg = {}) {
  return indicator_vector(g, {mask(pos), mask(neg)});
}

std::vector<Rat> spectrum_values(const Graph& g) {
  std::vector<Rat> vals;
  for (const auto& e : enumerate_delta1_spectrum(g)) vals.push_back(e.value);
  return vals;
}

}  // namespace

TEST_CASE("exact quotient at rational vectors") {
  Graph g6 = catalog_graph_or_throw("g6");
  CHECK(f1_exact(g6, vec(g6, {2, 5, 6})) == rat(5, 9));
  CHECK(f1_exact(g6, vec(g6, {1, 2, 5, 6})) == rat(2, 7));
  CHECK(f1_exact(g6, std::vector<Rat>(6, rat(3))) == rat(0));
  CHECK_THROWS_AS(f1_exact(g6, std::vector<Rat>(6, rat(0))), input_error);
  CHECK_THROWS_AS(f1_exact(g6, std::vector<Rat>(5, rat(1))), input_error);
}

TEST_CASE("operator image zonotopes") {
  Graph p6 = path_graph(6);
  std::vector<Rat> increasing;
  for (int i = 1; i <= 6; ++i) increasing.push_back(rat(i));
  Zonotope z = delta1_image(p6, increasing);
  CHECK(z.generators.empty());
  CHECK(z.center == std::vector<long>{-1, 0, 0, 0, 0, 1});

  Zonotope all_tied = delta1_image(p6, std::vector<Rat>(6, rat(0)));
  CHECK(all_tied.center == std::vector<long>(6, 0));
  CHECK(all_tied.generators.size() == p6.edges.size());

  Graph k2 = path_graph(2);
  Zonotope point = delta1_image(k2, {rat(1), rat(0)});
  CHECK(point.center == std::vector<long>{1, -1});
  CHECK(point.generators.empty());
}

TEST_CASE("zonotope decomposition") {
  Graph g6 = catalog_graph_or_throw("g6");
  std::vector<Rat> x = vec(g6, {2, 5, 6});
  auto cert = verify_eigenpair(g6, rat(5, 9), x);
  REQUIRE(cert.has_value());

  Zonotope z = delta1_image(g6, x);
  std::vector<Rat> member(g6.n);
  for (int i = 0; i < g6.n; ++i) member[i] = cert->balance[i].sum;
  auto coeffs = zonotope_decompose(z, member);
  REQUIRE(coeffs.has_value());
  REQUIRE(coeffs->size() == z.generators.size());
  std::vector<Rat> rebuilt(g6.n);
  for (int i = 0; i < g6.n; ++i) rebuilt[i] = z.center[i];
  for (size_t k = 0; k < z.generators.size(); ++k) {
    CHECK((*coeffs)[k] >= rat(-1));
    CHECK((*coeffs)[k] <= rat(1));
    rebuilt[z.generators[k].first] += (*coeffs)[k];
    rebuilt[z.generators[k].second] -= (*coeffs)[k];
  }
  CHECK(rebuilt == member);

  CHECK(!zonotope_decompose(z, std::vector<Rat>(6, rat(100))).has_value());
  CHECK_THROWS_AS(zonotope_decompose(z, std::vector<Rat>(5, rat(0))), input_error);
}

TEST_CASE("eigenpair verification") {
  Graph p6 = path_graph(6);
  CHECK(!verify_eigenpair(p6, rat(1, 4), vec(p6, {1, 2})).has_value());
  auto ok = verify_eigenpair(p6, rat(1, 3), vec(p6, {1, 2}));
  REQUIRE(ok.has_value());
  CHECK(certificate_valid(p6, *ok));

  Graph g6 = catalog_graph_or_throw("g6");
  auto g6cert = verify_eigenpair(g6, rat(5, 9), vec(g6, {2, 5, 6}));
  REQUIRE(g6cert.has_value());
  CHECK(certificate_valid(g6, *g6cert));

  Graph fig5 = catalog_graph_or_throw("twintri6");
  auto split = verify_eigenpair(fig5, rat(1, 2), vec(fig5, {3, 4}, {5, 6}));
  REQUIRE(split.has_value());
  CHECK(certificate_valid(fig5, *split));

  CHECK_THROWS_AS(verify_eigenpair(p6, rat(1), std::vector<Rat>(6, rat(0))), input_error);

  // Tampered certificates fail independent re-validation.
  EigenCertificate bad = *ok;
  bad.z[0] += 2;
  CHECK(!certificate_valid(p6, bad));
  EigenCertificate bent = *ok;
  bent.balance[0].sum += 1;
  CHECK(!certificate_valid(p6, bent));
}

TEST_CASE("simple nodal sets") {
  Graph p6 = path_graph(6);
  CHECK(simple_nodal_sets(p6) ==
        std::vector<std::pair<int, int>>{{0, 1}, {2, 3}, {4, 5}});

  Graph p3 = path_graph(3);
  CHECK(simple_nodal_sets(p3).empty());

  Graph t5 = catalog_graph_or_throw("tritail5");
  auto t5n = simple_nodal_sets(t5);
  CHECK(std::find(t5n.begin(), t5n.end(), std::make_pair(0, 1)) != t5n.end());

  Graph g6 = catalog_graph_or_throw("g6");
  auto g6n = simple_nodal_sets(g6);
  CHECK(g6n.size() == 9);
  CHECK(std::find(g6n.begin(), g6n.end(), std::make_pair(0, 4)) == g6n.end());

  Graph fig5 = catalog_graph_or_throw("twintri6");
  CHECK(simple_nodal_sets(fig5) ==
        std::vector<std::pair<int, int>>{{0, 1}, {2, 3}, {4, 5}});

  // Each simple nodal edge certifies its eigenpair.
  for (const auto* g : {&p6, &t5, &g6, &fig5}) {
    for (auto [i, j] : simple_nodal_sets(*g)) {
      Rat lam = rat(1) - rat(2, g->deg[i] + g->deg[j]);
      std::vector<Rat> x(g->n, rat(0));
      x[i] = x[j] = 1;
      auto cert = verify_eigenpair(*g, lam, x);
      REQUIRE(cert.has_value());
      CHECK(certificate_valid(*g, *cert));
    }
  }
}

TEST_CASE("spectrum scan matches the reference spectra") {
  CHECK(spectrum_values(catalog_graph_or_throw("g6")) ==
        std::vector<Rat>{rat(0), rat(2, 5), rat(5, 9), rat(3, 5), rat(2, 3), rat(5, 7),
                         rat(3, 4), rat(7, 9), rat(1)});
  CHECK(spectrum_values(path_graph(6)) ==
        std::vector<Rat>{rat(0), rat(1, 5), rat(1, 3), rat(1, 2), rat(1)});
  CHECK(spectrum_values(cycle_graph(8)) ==
        std::vector<Rat>{rat(0), rat(1, 4), rat(1, 3), rat(1, 2), rat(1)});
  CHECK(spectrum_values(cycle_graph(9)) ==
        std::vector<Rat>{rat(0), rat(1, 4), rat(1, 3), rat(1, 2), rat(1)});
  CHECK(spectrum_values(complete_graph(5)) == std::vector<Rat>{rat(0), rat(3, 4), rat(1)});
  CHECK(spectrum_values(complete_graph(4)) == std::vector<Rat>{rat(0), rat(2, 3), rat(1)});
  CHECK(spectrum_values(catalog_graph_or_throw("tritail5")) ==
        std::vector<Rat>{rat(0), rat(1, 3), rat(1, 2), rat(1)});
  CHECK(spectrum_values(catalog_graph_or_throw("twintri6")) ==
        std::vector<Rat>{rat(0), rat(1, 7), rat(1, 2), rat(2, 3), rat(1)});
}

TEST_CASE("spectrum scan properties") {
  for (const char* name : {"g6", "p6", "tritail5", "twintri6", "c8", "k5", "stair8"}) {
    Graph g = catalog_graph_or_throw(name);
    auto entries = enumerate_delta1_spectrum(g);
    REQUIRE(!entries.empty());
    CHECK(entries.front().value == rat(0));
    CHECK(entries.back().value == rat(1));
    for (size_t i = 0; i + 1 < entries.size(); ++i)
      CHECK(entries[i].value < entries[i + 1].value);
    for (const auto& e : entries) {
      CHECK(e.value >= rat(0));
      CHECK(e.value <= rat(1));
      CHECK(f1_pair(g, e.witness) == e.value);
      auto cert = verify_eigenpair(g, e.value, indicator_vector(g, e.witness));
      REQUIRE(cert.has_value());
      CHECK(certificate_valid(g, *cert));
    }
    CHECK((int)entries.size() >= distinct_count_lower_bound(g));
  }
  CHECK_THROWS_AS(enumerate_delta1_spectrum(complete_graph(11)), cap_error);

  Graph split = Graph::from_edges(4, {{1, 2}});
  auto vals = spectrum_values(split);
  CHECK(std::find(vals.begin(), vals.end(), rat(0)) != vals.end());
}

TEST_CASE("distinct-value lower bounds") {
  CHECK(distinct_count_lower_bound(catalog_graph_or_throw("g6")) == 7);
  CHECK(distinct_count_lower_bound(catalog_graph_or_throw("twintri6")) == 4);
  CHECK(distinct_count_lower_bound(stair_graph(8)) == 10);
  CHECK(distinct_count_lower_bound(Graph::from_edges(3, {})) == 2);
  CHECK(distinct_count_lower_bound(path_graph(3)) == 2);
}

TEST_CASE("criticality game") {
  Graph fig5 = catalog_graph_or_throw("twintri6");

  CriticalReport plus = is_critical_f1(fig5, vec(fig5, {3, 4}));
  CHECK(plus.critical);
  CHECK(plus.lambda == rat(1, 2));
  CHECK(plus.slack >= 0);
  CHECK(plus.patterns > 0);
  // A critical point of the quotient is a certified eigenpair.
  auto cert = verify_eigenpair(fig5, plus.lambda, vec(fig5, {3, 4}));
  REQUIRE(cert.has_value());

  CriticalReport mixed = is_critical_f1(fig5, vec(fig5, {3, 4}, {5, 6}));
  CHECK(!mixed.critical);
  CHECK(mixed.lambda == rat(1, 2));
  CHECK(mixed.slack < 0);
  CHECK(critical_best_slack(fig5, vec(fig5, {3, 4}, {5, 6}), mixed.direction, mixed.lambda) ==
        mixed.slack);
  // The documented refuting direction reaches slack exactly -2.
  CHECK(critical_best_slack(fig5, vec(fig5, {3, 4}, {5, 6}), vec(fig5, {1}, {2}), rat(1, 2)) ==
        rat(-2));

  Graph p4 = path_graph(4);
  CriticalReport flat = is_critical_f1(p4, std::vector<Rat>(4, rat(1)));
  CHECK(flat.critical);
  CHECK(flat.lambda == rat(0));

  CHECK_THROWS_AS(is_critical_f1(p4, std::vector<Rat>(4, rat(0))), input_error);
}
