#include "plap/catalog.hpp"

#include <cmath>

#include "plap/errors.hpp"

namespace plap {

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw input_error("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n, 1);
  return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph stair_graph(int n) {
  if (n < 8 || n % 2 != 0) throw input_error("stair graph needs an even vertex count >= 8");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (i + j <= n + 1) e.emplace_back(i, j);
  for (int i = 1; i <= n / 2 - 2; ++i) e.emplace_back(n - i, n);
  return Graph::from_edges(n, e);
}

namespace {

Graph g6_graph() {
  return Graph::from_edges(6, {{3, 4},
                               {4, 1},
                               {1, 2},
                               {2, 4},
                               {1, 3},
                               {2, 3},
                               {5, 6},
                               {1, 6},
                               {1, 5},
                               {2, 5}});
}

Graph tritail5_graph() {
  return Graph::from_edges(5, {{1, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
}

Graph twintri6_graph() {
  return Graph::from_edges(6, {{1, 2}, {1, 3}, {1, 4}, {3, 4}, {2, 6}, {2, 5}, {5, 6}});
}

std::vector<Rat> rats(std::initializer_list<std::pair<long, long>> vals) {
  std::vector<Rat> out;
  for (auto [n, d] : vals) out.push_back(rat(n, d));
  return out;
}

}  // namespace

std::optional<CatalogEntry> catalog_entry(const std::string& name) {
  const double s6 = std::sqrt(6.0), s10 = std::sqrt(10.0), s5 = std::sqrt(5.0);
  if (name == "g6") {
    CatalogEntry e;
    e.name = name;
    e.description = "6-vertex 10-edge graph, degree sequence (5,4,3,3,3,2)";
    e.graph = g6_graph();
    e.delta1_spectrum = rats({{0, 1},
                              {2, 5},
                              {5, 9},
                              {3, 5},
                              {2, 3},
                              {5, 7},
                              {3, 4},
                              {7, 9},
                              {1, 1}});
    e.p2_spectrum = {0.0,       (6 - s6) / 6, (20 - s10) / 15,
                     4.0 / 3.0, (6 + s6) / 6, (20 + s10) / 15};
    e.minmax_values = rats({{0, 1}, {2, 5}, {5, 7}, {1, 1}, {1, 1}, {1, 1}});
    e.multiway_values = rats({{0, 1}, {2, 5}, {5, 7}, {1, 1}, {1, 1}, {1, 1}});
    return e;
  }
  if (name == "p6") {
    CatalogEntry e;
    e.name = name;
    e.description = "path on 6 vertices";
    e.graph = path_graph(6);
    e.delta1_spectrum = rats({{0, 1}, {1, 5}, {1, 3}, {1, 2}, {1, 1}});
    e.p2_spectrum = {0.0, (3 - s5) / 4, (5 - s5) / 4, (3 + s5) / 4, (5 + s5) / 4, 2.0};
    e.minmax_values = rats({{0, 1}, {1, 5}, {1, 2}, {1, 1}, {1, 1}, {1, 1}});
    e.homological_values = rats({{0, 1}, {1, 5}, {1, 2}, {1, 1}});
    e.multiway_values = rats({{0, 1}, {1, 5}, {1, 2}, {1, 1}, {1, 1}, {1, 1}});
    return e;
  }
  if (name == "tritail5") {
    CatalogEntry e;
    e.name = name;
    e.description = "triangle {1,2,3} with tail 3-4-5";
    e.graph = tritail5_graph();
    e.delta1_spectrum = rats({{0, 1}, {1, 3}, {1, 2}, {1, 1}});
    e.homological_values = rats({{0, 1}, {1, 3}, {1, 1}});
    return e;
  }
  if (name == "twintri6") {
    CatalogEntry e;
    e.name = name;
    e.description = "triangles {1,3,4} and {2,5,6} joined by the bridge 1-2";
    e.graph = twintri6_graph();
    e.delta1_spectrum = rats({{0, 1}, {1, 7}, {1, 2}, {2, 3}, {1, 1}});
    return e;
  }
  // Parametric families.
  auto tail_int = [](const std::string& s, size_t at) -> int {
    if (at >= s.size()) return -1;
    for (size_t i = at; i < s.size(); ++i)
      if (!isdigit((unsigned char)s[i])) return -1;
    return std::stoi(s.substr(at));
  };
  if (name.size() > 1 && (name[0] == 'p' || name[0] == 'c' || name[0] == 'k')) {
    int n = tail_int(name, 1);
    if (n > 0 && n <= kMaxVertices) {
      CatalogEntry e;
      e.name = name;
      if (name[0] == 'p') {
        if (n == 6) return catalog_entry("p6");
        e.description = "path on " + std::to_string(n) + " vertices";
        e.graph = path_graph(n);
      } else if (name[0] == 'c') {
        if (n < 3) return std::nullopt;
        e.description = "cycle on " + std::to_string(n) + " vertices";
        e.graph = cycle_graph(n);
        e.delta1_spectrum.push_back(rat(0));
        for (int i = n / 2; i >= 1; --i) e.delta1_spectrum.push_back(rat(1, i));
      } else {
        if (n < 2) return std::nullopt;
        e.description = "complete graph on " + std::to_string(n) + " vertices";
        e.graph = complete_graph(n);
        e.delta1_spectrum.push_back(rat(0));
        for (int i = n / 2; i >= 1; --i) e.delta1_spectrum.push_back(rat(n - i, n - 1));
        e.p2_spectrum.assign(n, double(n) / double(n - 1));
        e.p2_spectrum[0] = 0.0;
      }
      return e;
    }
    return std::nullopt;
  }
  if (name.rfind("stair", 0) == 0) {
    int n = tail_int(name, 5);
    if (n >= 8 && n % 2 == 0 && n <= kMaxVertices) {
      CatalogEntry e;
      e.name = name;
      e.description = "staircase graph: edges {i,j} with i+j <= n+1 plus {n,n-i}, i <= n/2-2";
      e.graph = stair_graph(n);
      return e;
    }
  }
  return std::nullopt;
}

Graph catalog_graph_or_throw(const std::string& name) {
  auto e = catalog_entry(name);
  if (!e) throw input_error("unknown catalog graph: " + name);
  return e->graph;
}

std::vector<std::string> catalog_names() {
  return {"g6", "p6", "tritail5", "twintri6", "c8", "c9", "k5", "stair8"};
}

}  // namespace plap
