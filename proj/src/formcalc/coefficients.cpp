#include "cobord/formcalc/coefficients.hpp"

#include <algorithm>

#include "cobord/error.hpp"

namespace cobord::formcalc {

namespace {

void enumerate(const algebra::GradedRingSpec& ring, algebra::DegreeWindow w, std::size_t i, int deg,
               algebra::Exponent& cur, std::vector<algebra::Exponent>& out) {
  if (i == ring.size()) {
    if (w.contains(deg)) out.push_back(cur);
    return;
  }
  const int d = ring.generator(i).degree;
  for (int k = 0; deg + k * d >= w.lo; ++k) {
    cur[i] = k;
    enumerate(ring, w, i + 1, deg + k * d, cur, out);
  }
  cur[i] = 0;
}

}  // namespace

CoefficientSpace::CoefficientSpace(algebra::RingPtr ring, algebra::DegreeWindow window)
    : ring_(std::move(ring)), window_(window) {
  if (!window_.contains(0)) throw DomainError("coefficient window must contain degree 0");
  for (const auto& g : ring_->generators()) {
    if (g.invertible || g.degree >= 0 || g.degree % 2 != 0) {
      throw DomainError("coefficient generator '" + g.name + "' must be non-invertible of even negative degree");
    }
  }
  algebra::Exponent cur(ring_->size(), 0);
  enumerate(*ring_, window_, 0, 0, cur, basis_);
  std::sort(basis_.begin(), basis_.end(), algebra::GradedLex{});
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    index_.emplace(basis_[i], i);
    int d = 0;
    for (std::size_t k = 0; k < basis_[i].size(); ++k) d += basis_[i][k] * ring_->generator(k).degree;
    degrees_.push_back(d);
  }
  unit_ = index_.at(algebra::Exponent(ring_->size(), 0));
  table_.assign(basis_.size() * basis_.size(), -1);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      algebra::Exponent e = basis_[i];
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += basis_[j][k];
      if (auto it = index_.find(e); it != index_.end()) table_[i * basis_.size() + j] = static_cast<int>(it->second);
    }
  }
}

std::shared_ptr<const CoefficientSpace> CoefficientSpace::real() {
  static const auto r = std::make_shared<const CoefficientSpace>(algebra::rationals_ring(), algebra::DegreeWindow{0, 0});
  return r;
}

std::optional<std::size_t> CoefficientSpace::index_of(const algebra::Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<double> CoefficientSpace::embed(const algebra::GradedElement& x) const {
  if (!algebra::same_ring(x.ring(), ring_)) throw MismatchError("element not in the coefficient ring");
  std::vector<double> v(dim(), 0.0);
  for (const auto& [e, c] : x.terms()) {
    auto i = index_of(e);
    if (!i) throw DomainError("coefficient window too small for '" + x.to_string() + "'");
    v[*i] += c.get_d();
  }
  return v;
}

std::string CoefficientSpace::basis_name(std::size_t i) const {
  return algebra::GradedElement::monomial(ring_, basis_[i]).to_string();
}

bool CoefficientSpace::operator==(const CoefficientSpace& o) const {
  return *ring_ == *o.ring_ && window_.lo == o.window_.lo && window_.hi == o.window_.hi;
}

CoeffPtr make_coefficients(algebra::RingPtr ring, algebra::DegreeWindow window) {
  return std::make_shared<const CoefficientSpace>(std::move(ring), window);
}

bool same_coefficients(const CoeffPtr& a, const CoeffPtr& b) { return a == b || *a == *b; }

}  // namespace cobord::formcalc
