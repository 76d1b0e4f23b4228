#pragma once

#include <cstddef>
#include <vector>

#include "cobord/algebra/graded_ring.hpp"

namespace cobord::algebra {

// Dense matrix over Q, row-major.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

std::size_t rank(RationalMatrix m);

// Basis of {v : m v = 0}.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m);

// Incremental row-echelon basis used to test membership in a growing span.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  // Adds v; returns false when v was already in the span.
  bool add(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const;
  std::size_t dimension() const { return rows_.size(); }

 private:
  void reduce(std::vector<Rational>& v) const;

  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace cobord::algebra
