#include "cobord/algebra/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cobord/error.hpp"

namespace cobord::algebra {

TruncatedSeries::TruncatedSeries(RingPtr ring, std::vector<SeriesVariable> variables, int order)
    : ring_(std::move(ring)), variables_(std::move(variables)), order_(order) {
  if (!ring_) throw DomainError("null ring");
  if (order_ < 0) throw DomainError("negative truncation order");
  int g = 0;
  for (const auto& v : variables_) {
    if (v.degree <= 0) throw DomainError("series variable '" + v.name + "' must have positive degree");
    g = std::gcd(g, v.degree);
  }
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (variables_[i].name == variables_[j].name) throw DomainError("duplicate series variable");
    }
    weights_.push_back(variables_[i].degree / g);
  }
}

TruncatedSeries TruncatedSeries::constant(RingPtr ring, std::vector<SeriesVariable> variables, int order,
                                          const GradedElement& value) {
  TruncatedSeries s(std::move(ring), std::move(variables), order);
  s.set_coefficient(Exponent(s.variables_.size(), 0), value);
  return s;
}

TruncatedSeries TruncatedSeries::one(RingPtr ring, std::vector<SeriesVariable> variables, int order) {
  auto r = ring;
  return constant(std::move(ring), std::move(variables), order, GradedElement::one(r));
}

TruncatedSeries TruncatedSeries::variable(RingPtr ring, std::vector<SeriesVariable> variables, int order,
                                          std::string_view name) {
  TruncatedSeries s(ring, std::move(variables), order);
  Exponent e(s.variables_.size(), 0);
  e[s.variable_index(name)] = 1;
  s.set_coefficient(e, GradedElement::one(ring));
  return s;
}

TruncatedSeries TruncatedSeries::from_coefficients(RingPtr ring, SeriesVariable variable, int order,
                                                   const std::vector<GradedElement>& coefficients) {
  TruncatedSeries s(std::move(ring), {std::move(variable)}, order);
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    s.set_coefficient({static_cast<int>(k)}, coefficients[k]);
  }
  return s;
}

int TruncatedSeries::weight(const Exponent& e) const {
  int w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += e[i] * weights_[i];
  return w;
}

std::size_t TruncatedSeries::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return i;
  }
  throw DomainError("unknown series variable '" + std::string(name) + "'");
}

GradedElement TruncatedSeries::coefficient(const Exponent& e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? GradedElement::zero(ring_) : it->second;
}

GradedElement TruncatedSeries::coefficient(int power) const {
  if (variables_.size() != 1) throw DomainError("coefficient(int) needs a single-variable series");
  return coefficient(Exponent{power});
}

GradedElement TruncatedSeries::constant_term() const {
  return coefficient(Exponent(variables_.size(), 0));
}

void TruncatedSeries::set_coefficient(const Exponent& e, const GradedElement& c) {
  if (e.size() != variables_.size()) throw DomainError("exponent length does not match series variables");
  if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) {
    throw DomainError("negative exponent in power series");
  }
  if (!same_ring(c.ring(), ring_)) throw MismatchError("coefficient from a different ring");
  if (weight(e) > order_) return;
  if (c.is_zero()) {
    coeffs_.erase(e);
  } else {
    coeffs_.insert_or_assign(e, c);
  }
}

int TruncatedSeries::valuation() const {
  int v = order_ + 1;
  for (const auto& [e, c] : coeffs_) v = std::min(v, weight(e));
  return v;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& t) const {
  if (!same_ring(ring_, t.ring_)) throw MismatchError("series over different rings");
  if (variables_ != t.variables_) throw MismatchError("series in different variables");
}

void TruncatedSeries::prune() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    it = (it->second.is_zero() || weight(it->first) > order_) ? coeffs_.erase(it) : std::next(it);
  }
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(*this);
  for (auto& [e, c] : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& t) {
  check_compatible(t);
  order_ = std::min(order_, t.order_);
  for (const auto& [e, c] : t.coeffs_) {
    auto [it, inserted] = coeffs_.emplace(e, c);
    if (!inserted) it->second += c;
  }
  prune();
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& t) { return *this += -t; }

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!same_ring(a.ring(), b.ring())) throw MismatchError("series over different rings");
  if (a.variables() != b.variables()) throw MismatchError("series in different variables");
  TruncatedSeries r(a.ring(), a.variables(), std::min(a.order(), b.order()));
  TruncatedSeries::Coefficients out;
  Exponent e(a.variables().size());
  for (const auto& [ea, ca] : a.coefficients()) {
    const int wa = a.weight(ea);
    if (wa > r.order()) continue;
    for (const auto& [eb, cb] : b.coefficients()) {
      if (wa + b.weight(eb) > r.order()) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      GradedElement p = ca * cb;
      auto [it, inserted] = out.emplace(e, p);
      if (!inserted) it->second += p;
    }
  }
  for (auto& [ex, c] : out) r.set_coefficient(ex, c);
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const GradedElement& c) const {
  TruncatedSeries r(ring_, variables_, order_);
  for (const auto& [e, x] : coeffs_) r.set_coefficient(e, x * c);
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& q) const {
  TruncatedSeries r(ring_, variables_, order_);
  for (const auto& [e, x] : coeffs_) r.set_coefficient(e, x.scaled(q));
  return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned n) const {
  TruncatedSeries result = one(ring_, variables_, order_);
  TruncatedSeries base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > order_) throw DomainError("cannot raise the truncation order of a series");
  TruncatedSeries r(*this);
  r.order_ = order;
  r.prune();
  return r;
}

TruncatedSeries TruncatedSeries::shifted(const Exponent& shift) const {
  if (shift.size() != variables_.size()) throw DomainError("shift length does not match series variables");
  TruncatedSeries r(ring_, variables_, order_ + weight(shift));
  if (r.order_ < 0) throw DomainError("shift makes the truncation order negative");
  for (const auto& [e, c] : coeffs_) {
    Exponent f = e;
    for (std::size_t i = 0; i < f.size(); ++i) {
      f[i] += shift[i];
      if (f[i] < 0) throw DomainError("shift produces a negative exponent");
    }
    r.set_coefficient(f, c);
  }
  return r;
}

TruncatedSeries TruncatedSeries::map_coefficients(
    RingPtr target, const std::function<GradedElement(const GradedElement&)>& f) const {
  TruncatedSeries r(std::move(target), variables_, order_);
  for (const auto& [e, c] : coeffs_) r.set_coefficient(e, f(c));
  return r;
}

TruncatedSeries TruncatedSeries::derivative(std::size_t var) const {
  TruncatedSeries r(ring_, variables_, std::max(0, order_ - weights_.at(var)));
  for (const auto& [e, c] : coeffs_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    r.set_coefficient(f, c.scaled(e[var]));
  }
  return r;
}

TruncatedSeries TruncatedSeries::integral(std::size_t var) const {
  if (ring_->base() != Base::rationals) throw DivisionError("integration needs a rational base");
  TruncatedSeries r(ring_, variables_, order_ + weights_.at(var));
  for (const auto& [e, c] : coeffs_) {
    Exponent f = e;
    f[var] += 1;
    r.set_coefficient(f, c.scaled(Rational(1, f[var])));
  }
  return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
  return same_ring(ring_, other.ring_) && variables_ == other.variables_ && order_ == other.order_ &&
         coeffs_ == other.coeffs_;
}

std::string TruncatedSeries::to_string() const {
  if (coeffs_.empty()) return "0 + O(" + std::to_string(order_ + 1) + ")";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += variables_[i].name;
      if (e[i] != 1) mono += '^' + std::to_string(e[i]);
    }
    std::string cs = c.to_string();
    if (!first) {
      if (c.terms().size() == 1 && cs.front() == '-') {
        os << " - ";
        cs.erase(0, 1);
      } else {
        os << " + ";
      }
    }
    first = false;
    if (mono.empty()) {
      os << cs;
    } else if (cs == "1") {
      os << mono;
    } else if (c.terms().size() == 1) {
      os << cs << '*' << mono;
    } else {
      os << '(' << cs << ")*" << mono;
    }
  }
  os << " + O(" << order_ + 1 << ")";
  return os.str();
}

TruncatedSeries substitute(const TruncatedSeries& s, const std::vector<TruncatedSeries>& images) {
  if (images.size() != s.variables().size()) throw DomainError("one image per series variable required");
  if (images.empty()) return s;
  const auto& target_vars = images.front().variables();
  int order = s.order();
  std::vector<int> val(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto& im = images[i];
    if (!same_ring(im.ring(), s.ring())) throw MismatchError("image over a different ring");
    if (im.variables() != target_vars) throw MismatchError("images in different variables");
    if (!im.constant_term().is_zero()) throw DomainError("substituted series must have zero constant term");
    order = std::min(order, im.order());
    val[i] = im.valuation();
  }
  TruncatedSeries result(s.ring(), target_vars, order);
  std::vector<std::vector<TruncatedSeries>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const TruncatedSeries& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(TruncatedSeries::one(s.ring(), target_vars, order));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i].truncated(order));
    return cache[k];
  };
  for (const auto& [e, c] : s.coefficients()) {
    long min_weight = 0;
    for (std::size_t i = 0; i < e.size(); ++i) min_weight += static_cast<long>(e[i]) * val[i];
    if (min_weight > order) continue;
    TruncatedSeries term = TruncatedSeries::constant(s.ring(), target_vars, order, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term = term * power(i, e[i]);
    }
    result += term;
  }
  return result;
}

TruncatedSeries compose(const TruncatedSeries& s, const TruncatedSeries& t) {
  if (s.variables().size() != 1 || t.variables().size() != 1) {
    throw DomainError("compose expects single-variable series");
  }
  return substitute(s, {t});
}

TruncatedSeries invert(const TruncatedSeries& s) {
  if (!s.constant_term().is_one()) throw DomainError("series inverse needs constant term 1");
  // 1/(1 - u) = sum u^k, u has positive valuation.
  TruncatedSeries u = TruncatedSeries::one(s.ring(), s.variables(), s.order()) - s;
  TruncatedSeries result = TruncatedSeries::one(s.ring(), s.variables(), s.order());
  TruncatedSeries term = result;
  for (int k = 1; k <= s.order(); ++k) {
    term = term * u;
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

TruncatedSeries exp(const TruncatedSeries& s) {
  if (s.ring()->base() != Base::rationals) throw DivisionError("exp needs a rational base");
  if (!s.constant_term().is_zero()) throw DomainError("exp needs zero constant term");
  TruncatedSeries result = TruncatedSeries::one(s.ring(), s.variables(), s.order());
  TruncatedSeries term = result;
  for (int k = 1; k <= s.order(); ++k) {
    term = (term * s).scaled(Rational(1, k));
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

TruncatedSeries log(const TruncatedSeries& s) {
  if (s.ring()->base() != Base::rationals) throw DivisionError("log needs a rational base");
  if (!s.constant_term().is_one()) throw DomainError("log needs constant term 1");
  TruncatedSeries u = s - TruncatedSeries::one(s.ring(), s.variables(), s.order());
  TruncatedSeries result(s.ring(), s.variables(), s.order());
  TruncatedSeries power = TruncatedSeries::one(s.ring(), s.variables(), s.order());
  for (int k = 1; k <= s.order(); ++k) {
    power = power * u;
    if (power.is_zero()) break;
    result += power.scaled(Rational(k % 2 == 1 ? 1 : -1, k));
  }
  return result;
}

TruncatedSeries rational_power(const TruncatedSeries& s, const Rational& q) {
  return exp(log(s).scaled(q));
}

TruncatedSeries reversion(const TruncatedSeries& s) {
  if (s.variables().size() != 1) throw DomainError("reversion expects a single-variable series");
  if (!s.constant_term().is_zero()) throw DomainError("reversion needs zero constant term");
  if (!s.coefficient(1).is_one()) throw DomainError("reversion needs linear coefficient 1");
  const auto z = TruncatedSeries::variable(s.ring(), s.variables(), s.order(), s.variables()[0].name);
  const TruncatedSeries h = s - z;
  // g = z - h(g), each pass fixes one more coefficient.
  TruncatedSeries g = z;
  for (int k = 1; k < s.order(); ++k) {
    g = z - compose(h, g);
  }
  return g;
}

}  // namespace cobord::algebra
