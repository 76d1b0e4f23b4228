#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "cobord/algebra/graded_ring.hpp"

namespace cobord::algebra {

// Sparse element of a GradedRingSpec: exponent vector -> nonzero coefficient,
// kept in graded-lex order and truncated to the ring's degree window.
class GradedElement {
 public:
  using Terms = std::map<Exponent, Rational, GradedLex>;

  explicit GradedElement(RingPtr ring);
  GradedElement(RingPtr ring, Terms terms);

  static GradedElement zero(RingPtr ring) { return GradedElement(std::move(ring)); }
  static GradedElement constant(RingPtr ring, const Rational& value);
  static GradedElement one(RingPtr ring) { return constant(std::move(ring), 1); }
  static GradedElement generator(RingPtr ring, std::string_view name, int power = 1);
  static GradedElement monomial(RingPtr ring, Exponent e, const Rational& c = 1);

  // Canonical text form, e.g. "1 - 3/2*x1^2*u^-1".
  static GradedElement parse(RingPtr ring, std::string_view text);
  std::string to_string() const;

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::optional<Rational> as_constant() const;  // set when only the unit monomial occurs
  Rational coefficient(const Exponent& e) const;

  // Degree when homogeneous; nullopt for zero or inhomogeneous elements.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  GradedElement homogeneous_part(int degree) const;

  GradedElement operator-() const;
  GradedElement& operator+=(const GradedElement& b);
  GradedElement& operator-=(const GradedElement& b);
  GradedElement& operator*=(const GradedElement& b);
  GradedElement pow(unsigned n) const;
  GradedElement scaled(const Rational& q) const;

  bool operator==(const GradedElement& other) const;

 private:
  void check_same_ring(const GradedElement& b) const;
  void validate();

  RingPtr ring_;
  Terms terms_;
};

GradedElement operator+(GradedElement a, const GradedElement& b);
GradedElement operator-(GradedElement a, const GradedElement& b);
GradedElement operator*(const GradedElement& a, const GradedElement& b);

inline std::string to_string(const GradedElement& x) { return x.to_string(); }

}  // namespace cobord::algebra
