#pragma once
#include <optional>
#include <string>
#include <vector>

#include "plap/graph.hpp"
#include "plap/rational.hpp"

namespace plap {

// Named graph with the exact and floating reference values the verify
// command checks against. Empty vectors mean "no pinned value".
struct CatalogEntry {
  std::string name;
  std::string description;
  Graph graph;
  std::vector<Rat> delta1_spectrum;      // exact p = 1 eigenvalues, ascending
  std::vector<double> p2_spectrum;       // p = 2 normalized eigenvalues, ascending
  std::vector<Rat> minmax_values;        // k = 1..n variational p = 1 values
  std::vector<Rat> homological_values;   // ascending
  std::vector<Rat> multiway_values;      // h_k for k = 1..n
};

// Fixed names plus the parametric families pN (path), cN (cycle), kN
// (complete), stairN (even N >= 8: edges {i,j} for i+j <= N+1 plus
// {N, N-i} for 1 <= i <= N/2-2).
std::optional<CatalogEntry> catalog_entry(const std::string& name);
Graph catalog_graph_or_throw(const std::string& name);
std::vector<std::string> catalog_names();

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph stair_graph(int n);

}  // namespace plap
