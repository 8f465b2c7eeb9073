#pragma once
#include <vector>

#include "plap/rational.hpp"

namespace plap {

// Bounded-flow feasibility: find arc flows y_e in [lo_e, hi_e] such that the
// divergence sum(out) - sum(in) at every node lies in its interval
// [node_lo, node_hi]. All data exact rationals.
struct Arc {
  int tail = 0, head = 0;
  Rat lo, hi;
};

struct CirculationProblem {
  int nodes = 0;
  std::vector<Arc> arcs;
  std::vector<Rat> node_lo, node_hi;  // size == nodes
};

struct CirculationResult {
  bool feasible = false;
  std::vector<Rat> flow;  // per arc, set when feasible
};

// Decides feasibility by absorbing divergence intervals into arcs toward a
// collector node, applying the standard lower-bound transform, and running an
// exact max-flow (Edmonds-Karp on rational capacities). An empty constraint
// set (some lo > hi) is reported infeasible. Witness flows satisfy all bounds
// and intervals exactly.
CirculationResult circulation_feasible(const CirculationProblem& p);

}  // namespace plap
