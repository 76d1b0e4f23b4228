#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cobord/algebra/graded_element.hpp"

namespace cobord::formcalc {

// Real graded algebra spanned by the monomials of a ring whose degrees lie in a
// window; products leaving the window are dropped. Generators must have even
// negative degree, so the algebra is commutative and finite-dimensional.
class CoefficientSpace {
 public:
  CoefficientSpace(algebra::RingPtr ring, algebra::DegreeWindow window);

  static std::shared_ptr<const CoefficientSpace> real();

  const algebra::RingPtr& ring() const { return ring_; }
  algebra::DegreeWindow window() const { return window_; }
  std::size_t dim() const { return basis_.size(); }
  const algebra::Exponent& basis(std::size_t i) const { return basis_[i]; }
  int degree(std::size_t i) const { return degrees_[i]; }
  std::optional<std::size_t> index_of(const algebra::Exponent& e) const;
  std::size_t unit() const { return unit_; }
  // Index of basis(i) * basis(j), or -1 when it falls outside the window.
  int product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  // Coordinates of a ring element; terms outside the window raise DomainError.
  std::vector<double> embed(const algebra::GradedElement& x) const;
  std::string basis_name(std::size_t i) const;

  bool operator==(const CoefficientSpace& o) const;

 private:
  algebra::RingPtr ring_;
  algebra::DegreeWindow window_;
  std::vector<algebra::Exponent> basis_;
  std::vector<int> degrees_;
  std::map<algebra::Exponent, std::size_t> index_;
  std::vector<int> table_;
  std::size_t unit_ = 0;
};

using CoeffPtr = std::shared_ptr<const CoefficientSpace>;

CoeffPtr make_coefficients(algebra::RingPtr ring, algebra::DegreeWindow window);
bool same_coefficients(const CoeffPtr& a, const CoeffPtr& b);

}  // namespace cobord::formcalc
