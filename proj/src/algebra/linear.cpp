#include "cobord/algebra/linear.hpp"

#include "cobord/error.hpp"

namespace cobord::algebra {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    }
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rational>> nullspace(RationalMatrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

void SpanBuilder::reduce(std::vector<Rational>& v) const {
  if (v.size() != dim_) throw DomainError("vector of wrong dimension");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < dim_; ++c) v[c] -= f * rows_[i][c];
  }
}

bool SpanBuilder::add(std::vector<Rational> v) {
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && v[p] == 0) ++p;
  if (p == dim_) return false;
  const Rational inv = Rational(1) / v[p];
  for (auto& x : v) x *= inv;
  // Keep rows fully reduced against the new pivot.
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (f == 0) continue;
    for (std::size_t c = 0; c < dim_; ++c) row[c] -= f * v[c];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool SpanBuilder::contains(std::vector<Rational> v) const {
  reduce(v);
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace cobord::algebra
