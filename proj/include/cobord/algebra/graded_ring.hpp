#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cobord::algebra {

using Rational = mpq_class;
using Exponent = std::vector<int>;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

// Graded-lex: smaller total exponent first, ties broken so that earlier
// variables come first (x1 before x2).
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

enum class Base { integers, rationals };

struct Generator {
  std::string name;
  int degree = 0;
  bool invertible = false;
};

struct DegreeWindow {
  int lo = -1024;
  int hi = 1024;
  bool contains(int d) const { return lo <= d && d <= hi; }
};

// Generators of a graded commutative ring over Z or Q, plus the degree window
// every stored element is truncated to.
class GradedRingSpec {
 public:
  GradedRingSpec(std::vector<Generator> generators, Base base, DegreeWindow window,
                 int exponent_bound = 1 << 16);

  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  const Generator& generator(std::size_t i) const { return generators_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  Base base() const { return base_; }
  DegreeWindow window() const { return window_; }
  int exponent_bound() const { return exponent_bound_; }

  int degree_of(const Exponent& e) const;
  bool is_connected() const;  // polynomial ring, every generator of negative degree

  bool operator==(const GradedRingSpec& other) const;

 private:
  std::vector<Generator> generators_;
  Base base_;
  DegreeWindow window_;
  int exponent_bound_;
};

using RingPtr = std::shared_ptr<const GradedRingSpec>;

RingPtr make_ring(std::vector<Generator> generators, Base base = Base::rationals,
                  DegreeWindow window = {});
RingPtr rationals_ring();
RingPtr integers_ring();

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace cobord::algebra
