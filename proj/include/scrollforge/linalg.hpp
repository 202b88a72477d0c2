#pragma once

#include <vector>

#include "fp.hpp"

namespace scrollforge::linalg {

using polycore::PrimeField;

// Dense matrix over F_p. Row-major.
struct Mat {
  PrimeField field;
  size_t rows = 0, cols = 0;
  std::vector<uint32_t> a;

  Mat(const PrimeField& f, size_t r, size_t c) : field(f), rows(r), cols(c), a(r * c, 0) {}

  uint32_t& at(size_t i, size_t j) { return a[i * cols + j]; }
  uint32_t at(size_t i, size_t j) const { return a[i * cols + j]; }
};

// In-place reduced row echelon form; returns pivot column per pivot row.
inline std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t sel = r;
    while (sel < m.rows && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != r)
      for (size_t j = c; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    uint32_t inv = m.field.inv(m.at(r, c));
    for (size_t j = c; j < m.cols; ++j) m.at(r, j) = m.field.mul(m.at(r, j), inv);
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      uint32_t f = m.at(i, c);
      if (!f) continue;
      for (size_t j = c; j < m.cols; ++j)
        m.at(i, j) = m.field.sub(m.at(i, j), m.field.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline size_t rank(Mat m) { return rref(m).size(); }

// Canonical kernel basis (one vector per free column, unit at the free
// column, pivot entries filled from the echelon form).
inline std::vector<std::vector<uint32_t>> kernel(Mat m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<uint32_t>> basis;
  for (size_t c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<uint32_t> v(m.cols, 0);
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = m.field.neg(m.at(r, c));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Inverse of a square matrix; throws if singular.
inline Mat inverse(const Mat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
  Mat aug(m.field, m.rows, 2 * m.cols);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() != m.rows || piv.back() != m.rows - 1)
    throw std::domain_error("inverse: singular matrix");
  Mat inv(m.field, m.rows, m.cols);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
  return inv;
}

} // namespace scrollforge::linalg
