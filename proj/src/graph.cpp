#include "plap/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "plap/errors.hpp"

namespace plap {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& one_based) {
  if (n < 1 || n > kMaxVertices)
    throw input_error("graph: vertex count must be in 1.." + std::to_string(kMaxVertices));
  Graph g;
  g.n = n;
  g.adj.assign(n, 0);
  g.deg.assign(n, 0);
  for (auto [a, b] : one_based) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw input_error("graph: edge endpoint out of range: " + std::to_string(a) + " " +
                        std::to_string(b));
    if (a == b) throw input_error("graph: self-loop at vertex " + std::to_string(a));
    int i = a - 1, j = b - 1;
    if (g.has_edge(i, j))
      throw input_error("graph: duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    g.adj[i] |= 1u << j;
    g.adj[j] |= 1u << i;
    g.edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(g.edges.begin(), g.edges.end());
  for (int i = 0; i < n; ++i) g.deg[i] = set_size(g.adj[i]);
  return g;
}

bool Graph::connected() const {
  if (n == 0) return false;
  VertexSet seen = 1u, frontier = 1u;
  while (frontier) {
    VertexSet next = 0;
    for (int i = 0; i < n; ++i)
      if ((frontier >> i) & 1u) next |= adj[i];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == full_set();
}

int Graph::volume_total() const { return 2 * (int)edges.size(); }

Graph parse_edge_list(std::istream& in) {
  std::string line;
  auto strip = [](std::string s) {
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return std::string();
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  };
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::string t = strip(line);
    if (t.empty()) continue;
    std::istringstream ls(t);
    if (n < 0) {
      if (!(ls >> n) || !(ls >> std::ws).eof())
        throw input_error("edge list: first line must be the vertex count");
      if (n < 1 || n > kMaxVertices)
        throw input_error("edge list: vertex count out of range");
      continue;
    }
    int a, b;
    if (!(ls >> a >> b) || !(ls >> std::ws).eof())
      throw input_error("edge list: expected 'i j' pair, got: " + t);
    edges.emplace_back(a, b);
  }
  if (n < 0) throw input_error("edge list: empty input");
  return Graph::from_edges(n, edges);
}

Graph parse_edge_list_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open edge list file: " + path);
  return parse_edge_list(f);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n << "\n";
  for (auto [i, j] : g.edges) out << (i + 1) << " " << (j + 1) << "\n";
  return out.str();
}

int volume(const Graph& g, VertexSet a) {
  int v = 0;
  for (int i = 0; i < g.n; ++i)
    if ((a >> i) & 1u) v += g.deg[i];
  return v;
}

int edge_boundary(const Graph& g, VertexSet a) {
  int cut = 0;
  for (auto [i, j] : g.edges) {
    bool ia = (a >> i) & 1u, ja = (a >> j) & 1u;
    if (ia != ja) ++cut;
  }
  return cut;
}

Rat f1_pair(const Graph& g, SetPair s) {
  if (s.a & s.b) throw input_error("set pair: subsets must be disjoint");
  if (!(s.a | s.b)) throw input_error("set pair: union must be nonempty");
  int vol = volume(g, s.a | s.b);
  if (vol == 0) throw input_error("set pair: support has zero volume");
  return rat(edge_boundary(g, s.a) + edge_boundary(g, s.b), vol);
}

double rayleigh_fp(const Graph& g, const std::vector<double>& x, double p) {
  if ((int)x.size() != g.n) throw input_error("vector length must equal vertex count");
  if (p < 1) throw input_error("exponent must satisfy p >= 1");
  double num = 0, den = 0;
  for (auto [i, j] : g.edges) num += std::pow(std::fabs(x[i] - x[j]), p);
  bool nonzero = false;
  for (int i = 0; i < g.n; ++i) {
    if (x[i] != 0) nonzero = true;
    den += g.deg[i] * std::pow(std::fabs(x[i]), p);
  }
  if (!nonzero) throw input_error("quotient undefined for the zero vector");
  if (den == 0) throw input_error("quotient undefined: support has zero volume");
  return num / den;
}

namespace {

int components_within(const Graph& g, VertexSet s) {
  int comps = 0;
  VertexSet left = s;
  while (left) {
    ++comps;
    VertexSet seen = left & (~left + 1);  // lowest set bit
    VertexSet frontier = seen;
    while (frontier) {
      VertexSet next = 0;
      for (int i = 0; i < g.n; ++i)
        if ((frontier >> i) & 1u) next |= g.adj[i];
      next &= s;
      frontier = next & ~seen;
      seen |= frontier;
    }
    left &= ~seen;
  }
  return comps;
}

}  // namespace

int strong_nodal_count(const Graph& g, const std::vector<double>& x) {
  if ((int)x.size() != g.n) throw input_error("vector length must equal vertex count");
  VertexSet pos = 0, neg = 0;
  for (int i = 0; i < g.n; ++i) {
    if (x[i] > 0) pos |= 1u << i;
    if (x[i] < 0) neg |= 1u << i;
  }
  return components_within(g, pos) + components_within(g, neg);
}

int strong_nodal_count(const Graph& g, const std::vector<Rat>& x) {
  if ((int)x.size() != g.n) throw input_error("vector length must equal vertex count");
  VertexSet pos = 0, neg = 0;
  for (int i = 0; i < g.n; ++i) {
    if (x[i] > 0) pos |= 1u << i;
    if (x[i] < 0) neg |= 1u << i;
  }
  return components_within(g, pos) + components_within(g, neg);
}

std::vector<Rat> indicator_vector(const Graph& g, SetPair s) {
  std::vector<Rat> x(g.n, Rat(0));
  for (int i = 0; i < g.n; ++i) {
    if ((s.a >> i) & 1u) x[i] = 1;
    if ((s.b >> i) & 1u) x[i] = -1;
  }
  return x;
}

std::string set_str(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if ((s >> i) & 1u) {
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
  return out + "}";
}

}  // namespace plap
