#include "plap/gf2.hpp"

#include <algorithm>
#include <unordered_map>

namespace plap {

GF2Matrix GF2Matrix::transposed() const {
  GF2Matrix t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

GF2Matrix GF2Matrix::multiply(const GF2Matrix& other) const {
  if (cols != other.rows) throw input_error("gf2 multiply: dimension mismatch");
  GF2Matrix out(rows, other.cols);
  int w = other.words_per_row();
  for (int r = 0; r < rows; ++r) {
    uint64_t* dst = &out.words[(size_t)r * w];
    for (int k = 0; k < cols; ++k) {
      if (!get(r, k)) continue;
      const uint64_t* src = &other.words[(size_t)k * w];
      for (int j = 0; j < w; ++j) dst[j] ^= src[j];
    }
  }
  return out;
}

bool GF2Matrix::is_zero() const {
  for (uint64_t w : words)
    if (w) return false;
  return true;
}

int gf2_rank(GF2Matrix m) {
  int w = m.words_per_row();
  if (w == 0 || m.rows == 0) return 0;
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.get(r, c)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      std::swap_ranges(m.words.begin() + (size_t)pivot * w,
                       m.words.begin() + (size_t)(pivot + 1) * w,
                       m.words.begin() + (size_t)rank * w);
    for (int r = 0; r < m.rows; ++r) {
      if (r != rank && m.get(r, c)) {
        uint64_t* dst = &m.words[(size_t)r * w];
        const uint64_t* src = &m.words[(size_t)rank * w];
        for (int j = 0; j < w; ++j) dst[j] ^= src[j];
      }
    }
    ++rank;
  }
  return rank;
}

int gf2_quotient_dim(const GF2Matrix& boundary_in, const GF2Matrix& boundary_out) {
  // Middle space dimension must agree: columns of the outgoing map, rows of
  // the incoming map. Zero-dimensional ends are legal (0-row/0-col matrices).
  if (boundary_out.cols != boundary_in.rows)
    throw input_error("gf2 quotient: middle dimension mismatch");
  if (boundary_out.rows > 0 && boundary_in.cols > 0) {
    if (!boundary_out.multiply(boundary_in).is_zero())
      throw input_error("gf2 quotient: composition of boundaries is nonzero");
  }
  int kernel = boundary_out.cols - gf2_rank(boundary_out);
  return kernel - gf2_rank(boundary_in);
}

SparseCol sparse_xor(const SparseCol& a, const SparseCol& b) {
  SparseCol out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      out.push_back(a[i++]);
    else if (b[j] < a[i])
      out.push_back(b[j++]);
    else {
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

int sparse_rank(std::vector<SparseCol> cols) {
  std::unordered_map<int32_t, int> pivot_owner;  // pivot row -> column index
  pivot_owner.reserve(cols.size() * 2);
  int rank = 0;
  for (size_t c = 0; c < cols.size(); ++c) {
    SparseCol& col = cols[c];
    while (!col.empty()) {
      int32_t piv = col.back();
      auto it = pivot_owner.find(piv);
      if (it == pivot_owner.end()) {
        pivot_owner.emplace(piv, (int)c);
        ++rank;
        break;
      }
      col = sparse_xor(col, cols[it->second]);
    }
  }
  return rank;
}

std::vector<SparseCol> sparse_kernel_basis(const std::vector<SparseCol>& cols) {
  std::unordered_map<int32_t, size_t> owner;  // pivot row -> column index
  std::vector<SparseCol> work(cols.size()), combo(cols.size());
  std::vector<SparseCol> kernel;
  for (size_t c = 0; c < cols.size(); ++c) {
    SparseCol col = cols[c];
    SparseCol cmb = {(int32_t)c};
    while (!col.empty()) {
      auto it = owner.find(col.back());
      if (it == owner.end()) break;
      col = sparse_xor(col, work[it->second]);
      cmb = sparse_xor(cmb, combo[it->second]);
    }
    if (col.empty()) {
      kernel.push_back(cmb);
    } else {
      owner.emplace(col.back(), c);
      work[c] = std::move(col);
      combo[c] = std::move(cmb);
    }
  }
  return kernel;
}

}  // namespace plap
