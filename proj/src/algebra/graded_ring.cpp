#include "cobord/algebra/graded_ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "cobord/error.hpp"

namespace cobord::algebra {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  if (s.front() == '+') s.erase(0, 1);
  auto valid = [](const std::string& t) {
    std::size_t i = (!t.empty() && t.front() == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!(std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '/')) return false;
    }
    return std::count(t.begin(), t.end(), '/') <= 1 && t.back() != '/' &&
           t.find("-/") == std::string::npos;
  };
  if (!valid(s)) throw ParseError("malformed rational '" + std::string(text) + "'");
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
  const long sa = std::accumulate(a.begin(), a.end(), 0L);
  const long sb = std::accumulate(b.begin(), b.end(), 0L);
  if (sa != sb) return sa < sb;
  // Equal total: larger leading exponent first, so x1 sorts before x2.
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

GradedRingSpec::GradedRingSpec(std::vector<Generator> generators, Base base, DegreeWindow window,
                               int exponent_bound)
    : generators_(std::move(generators)), base_(base), window_(window),
      exponent_bound_(exponent_bound) {
  std::set<std::string> names;
  for (const auto& g : generators_) {
    if (g.name.empty()) throw DomainError("generator with empty name");
    if (!names.insert(g.name).second) throw DomainError("duplicate generator name '" + g.name + "'");
    if (g.degree == 0 && !g.invertible) {
      throw DomainError("generator '" + g.name + "' has degree 0 but is not a unit");
    }
  }
  if (window_.lo > window_.hi) throw DomainError("empty degree window");
  if (exponent_bound_ <= 0) throw DomainError("exponent bound must be positive");
}

std::optional<std::size_t> GradedRingSpec::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

int GradedRingSpec::degree_of(const Exponent& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * generators_[i].degree;
  return d;
}

bool GradedRingSpec::is_connected() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Generator& g) { return g.degree < 0 && !g.invertible; });
}

bool GradedRingSpec::operator==(const GradedRingSpec& other) const {
  if (base_ != other.base_ || window_.lo != other.window_.lo || window_.hi != other.window_.hi ||
      generators_.size() != other.generators_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& a = generators_[i];
    const auto& b = other.generators_[i];
    if (a.name != b.name || a.degree != b.degree || a.invertible != b.invertible) return false;
  }
  return true;
}

RingPtr make_ring(std::vector<Generator> generators, Base base, DegreeWindow window) {
  return std::make_shared<const GradedRingSpec>(std::move(generators), base, window);
}

RingPtr rationals_ring() {
  static const RingPtr q = make_ring({}, Base::rationals);
  return q;
}

RingPtr integers_ring() {
  static const RingPtr z = make_ring({}, Base::integers);
  return z;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace cobord::algebra
