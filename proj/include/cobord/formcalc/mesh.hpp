#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace cobord::formcalc {

enum class FactorKind { circle, interval };

// A circle carries n samples of [0, 1) with unit period; an interval carries
// n + 1 samples of [0, 1] including both ends.
struct Factor {
  FactorKind kind = FactorKind::circle;
  int n = 16;
  std::string name;

  int samples() const { return kind == FactorKind::circle ? n : n + 1; }
  double spacing() const { return 1.0 / n; }
  double coordinate(int i) const { return i * spacing(); }
  bool same_grid(const Factor& o) const { return kind == o.kind && n == o.n; }
};

class Mesh;
using MeshPtr = std::shared_ptr<const Mesh>;

// Product of one-dimensional factors; points stored row-major with the last
// factor varying fastest. Orientation is the factor order.
class Mesh {
 public:
  static constexpr int max_dim = 6;

  explicit Mesh(std::vector<Factor> factors);

  static MeshPtr make(std::vector<Factor> factors);
  static MeshPtr torus(int dim, int n, const std::string& prefix = "x");

  int dim() const { return static_cast<int>(factors_.size()); }
  const Factor& factor(int i) const { return factors_.at(static_cast<std::size_t>(i)); }
  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t points() const { return points_; }
  std::size_t stride(int i) const { return strides_.at(static_cast<std::size_t>(i)); }
  bool has_interval() const;

  std::vector<int> multi_index(std::size_t p) const;
  std::size_t flat_index(const std::vector<int>& idx) const;
  double coordinate(std::size_t p, int factor) const;

  bool operator==(const Mesh& o) const;

 private:
  std::vector<Factor> factors_;
  std::vector<std::size_t> strides_;
  std::size_t points_ = 1;
};

MeshPtr product_mesh(const Mesh& a, const Mesh& b);
// Mesh formed by the factors [first, last).
MeshPtr sub_mesh(const Mesh& m, int first, int last);
bool same_mesh(const MeshPtr& a, const MeshPtr& b);

}  // namespace cobord::formcalc
