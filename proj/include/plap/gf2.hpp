#pragma once
#include <cstdint>
#include <vector>

#include "plap/errors.hpp"

namespace plap {

// Dense bit matrix over the two-element field; rows packed into 64-bit words.
struct GF2Matrix {
  int rows = 0, cols = 0;
  std::vector<uint64_t> words;  // row-major, words_per_row() per row

  GF2Matrix() = default;
  GF2Matrix(int r, int c) : rows(r), cols(c), words((size_t)r * wpr(c), 0) {}

  static int wpr(int c) { return (c + 63) / 64; }
  int words_per_row() const { return wpr(cols); }

  static GF2Matrix identity(int n) {
    GF2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  bool get(int r, int c) const {
    return (words[(size_t)r * words_per_row() + c / 64] >> (c % 64)) & 1u;
  }
  void set(int r, int c, bool v) {
    uint64_t& w = words[(size_t)r * words_per_row() + c / 64];
    uint64_t bit = uint64_t(1) << (c % 64);
    if (v)
      w |= bit;
    else
      w &= ~bit;
  }

  GF2Matrix transposed() const;
  GF2Matrix multiply(const GF2Matrix& other) const;
  bool is_zero() const;
};

// Rank over the two-element field via Gaussian elimination on packed rows.
int gf2_rank(GF2Matrix m);

// dim ker(boundary_out) - rank(boundary_in), i.e. the quotient dimension of
// cycles modulo boundaries when boundary_out maps the middle space down and
// boundary_in maps into it. Requires boundary_out * boundary_in == 0.
int gf2_quotient_dim(const GF2Matrix& boundary_in, const GF2Matrix& boundary_out);

// --- Sparse columns (sorted row-index vectors) used for large complexes ---

using SparseCol = std::vector<int32_t>;

// Symmetric difference of two sorted index vectors (XOR of bit columns).
SparseCol sparse_xor(const SparseCol& a, const SparseCol& b);

// Rank of a matrix given as sparse columns, by left-to-right elimination.
int sparse_rank(std::vector<SparseCol> cols);

// Kernel basis of a sparse column matrix, as sorted combinations of column
// indices. Intended for small audit-sized inputs.
std::vector<SparseCol> sparse_kernel_basis(const std::vector<SparseCol>& cols);

}  // namespace plap
