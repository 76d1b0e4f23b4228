#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cobord/algebra/graded_element.hpp"

namespace cobord::algebra {

struct SeriesVariable {
  std::string name;
  int degree = 2;
  bool operator==(const SeriesVariable&) const = default;
};

// Power series in a few graded variables with GradedElement coefficients.
// A variable of degree d has weight d / g, where g is the gcd of all variable
// degrees; only monomials of total weight <= order are kept.
class TruncatedSeries {
 public:
  using Coefficients = std::map<Exponent, GradedElement, GradedLex>;

  TruncatedSeries(RingPtr ring, std::vector<SeriesVariable> variables, int order);

  static TruncatedSeries constant(RingPtr ring, std::vector<SeriesVariable> variables, int order,
                                  const GradedElement& value);
  static TruncatedSeries one(RingPtr ring, std::vector<SeriesVariable> variables, int order);
  static TruncatedSeries variable(RingPtr ring, std::vector<SeriesVariable> variables, int order,
                                  std::string_view name);
  // Single-variable series from coefficients c_0, c_1, ... (entries beyond order dropped).
  static TruncatedSeries from_coefficients(RingPtr ring, SeriesVariable variable, int order,
                                           const std::vector<GradedElement>& coefficients);

  const RingPtr& ring() const { return ring_; }
  const std::vector<SeriesVariable>& variables() const { return variables_; }
  int order() const { return order_; }
  const Coefficients& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  int weight(const Exponent& e) const;
  int weight_of_variable(std::size_t i) const { return weights_.at(i); }
  std::size_t variable_index(std::string_view name) const;

  GradedElement coefficient(const Exponent& e) const;
  GradedElement coefficient(int power) const;  // single-variable shorthand
  GradedElement constant_term() const;
  void set_coefficient(const Exponent& e, const GradedElement& c);

  // Smallest weight of a monomial with nonzero coefficient (order + 1 for zero).
  int valuation() const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& t);
  TruncatedSeries& operator-=(const TruncatedSeries& t);
  TruncatedSeries scaled(const GradedElement& c) const;
  TruncatedSeries scaled(const Rational& q) const;
  TruncatedSeries pow(unsigned n) const;

  // Same coefficients truncated to a smaller order.
  TruncatedSeries truncated(int order) const;

  // Multiply by a monomial in the series variables; exponents may be negative
  // as long as every resulting exponent stays >= 0.
  TruncatedSeries shifted(const Exponent& e) const;

  TruncatedSeries map_coefficients(RingPtr target,
                                   const std::function<GradedElement(const GradedElement&)>& f) const;

  TruncatedSeries derivative(std::size_t var) const;
  TruncatedSeries integral(std::size_t var) const;  // needs a rational base

  bool operator==(const TruncatedSeries& other) const;
  std::string to_string() const;

 private:
  void check_compatible(const TruncatedSeries& t) const;
  void prune();

  RingPtr ring_;
  std::vector<SeriesVariable> variables_;
  std::vector<int> weights_;
  int order_;
  Coefficients coeffs_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

// Substitute images[i] for variable i of s. Every image must have zero constant
// term and all images share one variable set; the result has the smaller of the
// two orders.
TruncatedSeries substitute(const TruncatedSeries& s, const std::vector<TruncatedSeries>& images);

// Single-variable composition s(t(z)).
TruncatedSeries compose(const TruncatedSeries& s, const TruncatedSeries& t);

// Multiplicative inverse; the constant term must be exactly 1.
TruncatedSeries invert(const TruncatedSeries& s);

// exp needs a zero constant term, log a constant term of 1; both need Q.
TruncatedSeries exp(const TruncatedSeries& s);
TruncatedSeries log(const TruncatedSeries& s);

// s^q for rational q, constant term 1, rational base.
TruncatedSeries rational_power(const TruncatedSeries& s, const Rational& q);

// Compositional inverse of z + O(z^2) in one variable.
TruncatedSeries reversion(const TruncatedSeries& s);

}  // namespace cobord::algebra
