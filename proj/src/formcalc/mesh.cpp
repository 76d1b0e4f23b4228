#include "cobord/formcalc/mesh.hpp"

#include "cobord/error.hpp"

namespace cobord::formcalc {

Mesh::Mesh(std::vector<Factor> factors) : factors_(std::move(factors)) {
  if (dim() > max_dim) throw ResourceError("mesh dimension exceeds " + std::to_string(max_dim));
  int intervals = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    auto& f = factors_[i];
    if (f.n < 4) throw DomainError("each mesh factor needs N >= 4");
    if (f.kind == FactorKind::interval) {
      ++intervals;
      if (f.n % 2 != 0) throw DomainError("interval factors need an even N for Simpson quadrature");
    }
    if (f.name.empty()) f.name = "x" + std::to_string(i);
  }
  if (intervals > 1) throw DomainError("at most one interval factor");
  strides_.assign(factors_.size(), 1);
  for (int i = dim() - 1; i >= 0; --i) {
    strides_[static_cast<std::size_t>(i)] = points_;
    points_ *= static_cast<std::size_t>(factors_[static_cast<std::size_t>(i)].samples());
  }
}

MeshPtr Mesh::make(std::vector<Factor> factors) { return std::make_shared<const Mesh>(std::move(factors)); }

MeshPtr Mesh::torus(int dim, int n, const std::string& prefix) {
  std::vector<Factor> f;
  for (int i = 0; i < dim; ++i) f.push_back({FactorKind::circle, n, prefix + std::to_string(i)});
  return make(std::move(f));
}

bool Mesh::has_interval() const {
  for (const auto& f : factors_) {
    if (f.kind == FactorKind::interval) return true;
  }
  return false;
}

std::vector<int> Mesh::multi_index(std::size_t p) const {
  std::vector<int> idx(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    idx[i] = static_cast<int>(p / strides_[i]);
    p %= strides_[i];
  }
  return idx;
}

std::size_t Mesh::flat_index(const std::vector<int>& idx) const {
  std::size_t p = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) p += static_cast<std::size_t>(idx[i]) * strides_[i];
  return p;
}

double Mesh::coordinate(std::size_t p, int factor) const {
  const auto f = static_cast<std::size_t>(factor);
  const int i = static_cast<int>((p / strides_[f]) % static_cast<std::size_t>(factors_[f].samples()));
  return factors_[f].coordinate(i);
}

bool Mesh::operator==(const Mesh& o) const {
  if (factors_.size() != o.factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (!factors_[i].same_grid(o.factors_[i])) return false;
  }
  return true;
}

MeshPtr product_mesh(const Mesh& a, const Mesh& b) {
  auto f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return Mesh::make(std::move(f));
}

MeshPtr sub_mesh(const Mesh& m, int first, int last) {
  if (first < 0 || last > m.dim() || first > last) throw DomainError("factor range outside the mesh");
  return Mesh::make({m.factors().begin() + first, m.factors().begin() + last});
}

bool same_mesh(const MeshPtr& a, const MeshPtr& b) { return a == b || *a == *b; }

}  // namespace cobord::formcalc
