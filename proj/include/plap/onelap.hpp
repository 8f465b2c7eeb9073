#pragma once
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "plap/graph.hpp"
#include "plap/rational.hpp"

namespace plap {

// Exact p = 1 quotient sum_E |x_i - x_j| / sum_V deg(i)|x_i| at a rational
// vector. Rejects vectors whose weighted support is empty.
Rat f1_exact(const Graph& g, const std::vector<Rat>& x);

// Image of the set-valued p = 1 operator at x: a translated sum of segments.
// Coordinate i of a member point is center[i] plus a contribution t in
// [-1, 1] per generator edge (i, j) (+t at i, -t at j).
struct Zonotope {
  std::vector<long> center;
  std::vector<std::pair<int, int>> generators;  // tied edges, 0-based
};
Zonotope delta1_image(const Graph& g, const std::vector<Rat>& x);

// Expresses y - center over the generators when y lies in the zonotope;
// returns the per-generator coefficients.
std::optional<std::vector<Rat>> zonotope_decompose(const Zonotope& z, const std::vector<Rat>& y);

// Exact witness that (lambda, x) solves the p = 1 eigen-inclusion: edge
// values z_ij antisymmetric with z_ij in Sgn(x_i - x_j), and each vertex
// balance sum_j z_ij inside lambda * deg(i) * Sgn(x_i).
struct VertexBalance {
  Rat sum, lo, hi;
};
struct EigenCertificate {
  Rat lambda;
  std::vector<Rat> x;
  std::vector<Rat> z;  // per graph edge (i, j) with i < j: the value z_ij
  std::vector<VertexBalance> balance;
};

// Splits edges into sign-fixed and tied, absorbs the fixed flow into the
// vertex intervals, and decides the rest by exact bounded-flow feasibility.
// Empty result means the pair is refused (not an eigenpair).
std::optional<EigenCertificate> verify_eigenpair(const Graph& g, const Rat& lambda,
                                                 const std::vector<Rat>& x);

// Independent re-validation of a certificate by direct substitution.
bool certificate_valid(const Graph& g, const EigenCertificate& cert);

// Edges {i,j} whose removal together with both endpoints leaves no isolated
// vertex; each yields the certified eigenpair (1 - 2/(deg i + deg j), 1_{i,j}).
std::vector<std::pair<int, int>> simple_nodal_sets(const Graph& g);

// Certified eigenvalues found by scanning all signed-indicator vectors
// 1_A - 1_B (a certified subset of the spectrum; complete on the catalog
// reference graphs). Sorted ascending, one certifying pair per value.
struct SpectrumEntry {
  Rat value;
  SetPair witness;
};
std::vector<SpectrumEntry> enumerate_delta1_spectrum(const Graph& g);

// Criticality of x for the p = 1 quotient, decided through the finite
// tie-resolution game: for each probe direction y, the best achievable
// slack Phi - lambda * Psi over all resolution patterns is computed
// exactly; a negative best slack refutes criticality with witness y.
// A "critical" verdict is exhaustive over the probe family only.
struct CriticalReport {
  bool critical = false;
  Rat lambda;
  Rat slack;                   // worst best-slack encountered over the family
  std::vector<Rat> direction;  // the direction attaining it (witness when negative)
  int64_t patterns = 0;        // tie-resolution patterns evaluated in total
};
CriticalReport is_critical_f1(const Graph& g, const std::vector<Rat>& x);

// Best achievable slack at one probe direction (exposed for auditing).
Rat critical_best_slack(const Graph& g, const std::vector<Rat>& x, const std::vector<Rat>& y,
                        const Rat& lambda, int64_t* patterns = nullptr);

// 2 + the number of distinct endpoint degree sums over the simple nodal
// edges: a lower bound on the number of distinct p = 1 eigenvalues.
int distinct_count_lower_bound(const Graph& g);

}  // namespace plap
