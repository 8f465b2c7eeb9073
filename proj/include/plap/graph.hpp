#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "plap/rational.hpp"

namespace plap {

// Vertex subsets as bitmasks over 0-based vertex indices; graphs are capped
// at 16 vertices, far above every enumeration this library performs.
using VertexSet = uint32_t;

inline int set_size(VertexSet s) { return __builtin_popcount(s); }

constexpr int kMaxVertices = 16;

// Simple undirected finite graph. Vertices are 1-based in every external
// format (files, CLI, printed sets) and 0-based internally.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based, tail < head, sorted
  std::vector<VertexSet> adj;              // neighbor mask per vertex
  std::vector<int> deg;

  // Validates and normalizes a 1-based edge list: vertices in 1..n, no
  // self-loops, duplicate edges rejected.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& one_based);

  bool has_edge(int i, int j) const { return (adj[i] >> j) & 1u; }
  VertexSet full_set() const { return (n == 32) ? ~0u : ((1u << n) - 1); }
  bool connected() const;
  int volume_total() const;  // 2|E|
};

// Edge-list file: first line the vertex count, then one "i j" pair per line,
// 1-based; '#' starts a comment; blank lines ignored.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_file(const std::string& path);
std::string format_edge_list(const Graph& g);

// Ordered pair of disjoint vertex subsets; the signed indicator vector it
// labels is +1 on a, -1 on b, 0 elsewhere.
struct SetPair {
  VertexSet a = 0, b = 0;
  friend auto operator<=>(const SetPair&, const SetPair&) = default;
};

// Sum of degrees over the subset.
int volume(const Graph& g, VertexSet a);

// Number of edges with exactly one endpoint in the subset.
int edge_boundary(const Graph& g, VertexSet a);

// Exact value of the p=1 quotient at the signed indicator of (a, b):
// (|boundary(a)| + |boundary(b)|) / volume(a | b). Requires a, b disjoint
// and a | b nonempty.
Rat f1_pair(const Graph& g, SetPair s);

// Quotient sum_edges |x_i - x_j|^p / sum_i deg(i) |x_i|^p for p >= 1.
// Zero vectors are rejected. Zero-degree vertices contribute nothing to the
// denominator; a vector supported only on such vertices is rejected too.
double rayleigh_fp(const Graph& g, const std::vector<double>& x, double p);

// Connected components of the positive support plus those of the negative
// support, counted in the respective induced subgraphs.
int strong_nodal_count(const Graph& g, const std::vector<double>& x);
int strong_nodal_count(const Graph& g, const std::vector<Rat>& x);

// Signed indicator vector of a set pair, as exact rationals.
std::vector<Rat> indicator_vector(const Graph& g, SetPair s);

// 1-based pretty form like "{2,5,6}" for error messages and tables.
std::string set_str(VertexSet s);

}  // namespace plap
