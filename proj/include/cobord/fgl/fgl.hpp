#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cobord/algebra/graded_element.hpp"
#include "cobord/algebra/ring_map.hpp"
#include "cobord/algebra/series.hpp"
#include "cobord/genera/genera.hpp"

namespace cobord::fgl {

using algebra::GradedElement;
using algebra::RingMap;
using algebra::RingPtr;
using algebra::TruncatedSeries;

// f(x, y) truncated at the series order. A law flagged `polynomial` is known to
// be exactly its (finite) series, so it can be re-truncated at any order.
class FormalGroupLaw {
 public:
  explicit FormalGroupLaw(TruncatedSeries f, bool polynomial = false);

  static std::vector<algebra::SeriesVariable> variables();  // x, y of degree 2
  static FormalGroupLaw parse(RingPtr ring, int order, std::string_view text, bool polynomial = false);

  const TruncatedSeries& series() const { return f_; }
  const RingPtr& ring() const { return f_.ring(); }
  int order() const { return f_.order(); }
  bool polynomial() const { return polynomial_; }

  // Same law at another order; raising it needs a polynomial law.
  FormalGroupLaw with_order(int order) const;

  // f(a, b) for one-variable series a, b with zero constant term.
  TruncatedSeries apply(const TruncatedSeries& a, const TruncatedSeries& b) const;

 private:
  TruncatedSeries f_;
  bool polynomial_;
};

struct FglReport {
  bool valid = true;
  std::string axiom;     // unit, commutativity, associativity
  std::string monomial;  // first failing monomial, e.g. "x^2"
  std::string defect;    // its coefficient in lhs - rhs
};

FglReport fgl_validate(const FormalGroupLaw& f);

// One-variable series in x.
TruncatedSeries fgl_log(const FormalGroupLaw& f);
FormalGroupLaw fgl_from_log(const TruncatedSeries& log);

// Law over Q[CP1..CP(N-1)] with logarithm sum [CP^n] x^{n+1}/(n+1).
FormalGroupLaw universal_fgl_rational(int order);

struct Classification {
  RingMap theta;             // Q[CP1, ...] -> target ring
  FormalGroupLaw image;      // theta_* of the universal law
  bool matches = true;       // image equals the target law
  std::string mismatch;      // first differing monomial, if any
};

// theta([CP^n]) = (n+1) [x^{n+1}] log_g.
Classification quillen_classify(const FormalGroupLaw& g);
// theta([CP^n]) = genus value of CP^n; the image is the law of the genus.
Classification quillen_classify(const genera::GenusTable& table, int order);

// [m](x) with [1](x) = x and [m+1](x) = f([m](x), x).
TruncatedSeries n_series(const FormalGroupLaw& f, int m);
TruncatedSeries p_series(const FormalGroupLaw& f, int p);
bool is_prime(int p);

struct LandweberStage {
  int stage = 0;
  std::string v;       // v_n reduced modulo (p, v_1, ..., v_{n-1})
  std::string status;  // regular, unit, vacuous, zero-divisor, undecided
};

struct LandweberVerdict {
  int prime = 0;
  std::string verdict;  // exact-through-stage-n, fails-at-stage-n, inconclusive
  std::string reason;
  std::vector<LandweberStage> stages;
};

std::vector<LandweberVerdict> landweber_check(const FormalGroupLaw& f, const std::vector<int>& primes, int stages);

// additive, multiplicative, mult-u, mult-laurent, universal.
FormalGroupLaw named_fgl(std::string_view name, int order);
std::vector<std::string> named_fgl_names();

}  // namespace cobord::fgl
