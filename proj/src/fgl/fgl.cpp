#include "cobord/fgl/fgl.hpp"

#include <sstream>

#include "cobord/algebra/io.hpp"
#include "cobord/error.hpp"

namespace cobord::fgl {

using algebra::Exponent;
using algebra::Rational;
using algebra::SeriesVariable;

namespace {

std::string monomial_text(const std::vector<SeriesVariable>& vars, const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i].name;
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

// First monomial where a and b differ, compared through canonical text so that
// laws over Z and over Q can be matched.
std::optional<std::pair<std::string, std::string>> first_difference(const TruncatedSeries& a,
                                                                    const TruncatedSeries& b) {
  std::map<Exponent, std::pair<std::string, std::string>, algebra::GradedLex> all;
  for (const auto& [e, c] : a.coefficients()) all[e].first = c.to_string();
  for (const auto& [e, c] : b.coefficients()) all[e].second = c.to_string();
  for (auto& [e, p] : all) {
    if (p.first.empty()) p.first = "0";
    if (p.second.empty()) p.second = "0";
    if (p.first != p.second) return std::make_pair(monomial_text(a.variables(), e), p.first + " vs " + p.second);
  }
  return std::nullopt;
}

bool record_defect(FglReport& r, const char* axiom, const TruncatedSeries& diff) {
  if (diff.is_zero()) return false;
  const auto& [e, c] = *diff.coefficients().begin();
  r.valid = false;
  r.axiom = axiom;
  r.monomial = monomial_text(diff.variables(), e);
  r.defect = c.to_string();
  return true;
}

std::vector<SeriesVariable> x_only() { return {{"x", 2}}; }

Rational mod_p(const Rational& q, int p) {
  if (q.get_den() != 1) throw DomainError("p-series coefficient is not integral");
  mpz_class r = q.get_num() % p;
  if (r < 0) r += p;
  return Rational(r);
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool in_ideal(const std::vector<Exponent>& ideal, const Exponent& m) {
  for (const auto& g : ideal) {
    if (divides(g, m)) return true;
  }
  return false;
}

// m is a non-zero-divisor modulo a monomial ideal I iff (I : m) = I, and
// (I : m) is generated by g / gcd(g, m) for g in I.
bool monomial_regular(const std::vector<Exponent>& ideal, const Exponent& m) {
  for (const auto& g : ideal) {
    Exponent q(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) q[i] = std::max(0, g[i] - m[i]);
    if (!in_ideal(ideal, q)) return false;
  }
  return true;
}

}  // namespace

FormalGroupLaw::FormalGroupLaw(TruncatedSeries f, bool polynomial) : f_(std::move(f)), polynomial_(polynomial) {
  if (f_.variables() != variables()) throw DomainError("a formal group law is a series in x, y of degree 2");
}

std::vector<SeriesVariable> FormalGroupLaw::variables() { return {{"x", 2}, {"y", 2}}; }

FormalGroupLaw FormalGroupLaw::parse(RingPtr ring, int order, std::string_view text, bool polynomial) {
  return FormalGroupLaw(algebra::parse_series(std::move(ring), variables(), order, text), polynomial);
}

FormalGroupLaw FormalGroupLaw::with_order(int order) const {
  if (order <= f_.order()) return FormalGroupLaw(f_.truncated(order), polynomial_);
  if (!polynomial_) throw DomainError("cannot raise the order of a truncated formal group law");
  TruncatedSeries g(ring(), variables(), order);
  for (const auto& [e, c] : f_.coefficients()) g.set_coefficient(e, c);
  return FormalGroupLaw(std::move(g), true);
}

TruncatedSeries FormalGroupLaw::apply(const TruncatedSeries& a, const TruncatedSeries& b) const {
  return algebra::substitute(f_, {a, b});
}

FglReport fgl_validate(const FormalGroupLaw& f) {
  FglReport r;
  const auto& ring = f.ring();
  const int n = f.order();
  const auto xy = FormalGroupLaw::variables();
  const auto x = TruncatedSeries::variable(ring, xy, n, "x");
  const auto y = TruncatedSeries::variable(ring, xy, n, "y");
  const TruncatedSeries zero(ring, xy, n);
  if (record_defect(r, "unit", f.apply(x, zero) - x)) return r;
  if (record_defect(r, "unit", f.apply(zero, y) - y)) return r;
  if (record_defect(r, "commutativity", f.apply(y, x) - f.series())) return r;
  const std::vector<SeriesVariable> xyz{{"x", 2}, {"y", 2}, {"z", 2}};
  const auto X = TruncatedSeries::variable(ring, xyz, n, "x");
  const auto Y = TruncatedSeries::variable(ring, xyz, n, "y");
  const auto Z = TruncatedSeries::variable(ring, xyz, n, "z");
  const auto lhs = f.apply(f.apply(X, Y), Z);
  const auto rhs = f.apply(X, f.apply(Y, Z));
  record_defect(r, "associativity", lhs - rhs);
  return r;
}

TruncatedSeries fgl_log(const FormalGroupLaw& f) {
  if (f.ring()->base() != algebra::Base::rationals) throw DivisionError("the logarithm needs a rational base");
  const auto fy = f.series().derivative(1);
  const auto x = TruncatedSeries::variable(f.ring(), x_only(), fy.order(), "x");
  const TruncatedSeries zero(f.ring(), x_only(), fy.order());
  return algebra::invert(algebra::substitute(fy, {x, zero})).integral(0);
}

FormalGroupLaw fgl_from_log(const TruncatedSeries& log) {
  if (log.variables().size() != 1) throw DomainError("a logarithm is a series in one variable");
  const int n = log.order();
  const auto xy = FormalGroupLaw::variables();
  const auto x = TruncatedSeries::variable(log.ring(), xy, n, "x");
  const auto y = TruncatedSeries::variable(log.ring(), xy, n, "y");
  const auto sum = algebra::substitute(log, {x}) + algebra::substitute(log, {y});
  return FormalGroupLaw(algebra::substitute(algebra::reversion(log), {sum}));
}

FormalGroupLaw universal_fgl_rational(int order) {
  if (order < 2) throw DomainError("order must be at least 2");
  const auto ring = genera::cobordism_ring(order - 1);
  TruncatedSeries log(ring, x_only(), order);
  log.set_coefficient({1}, GradedElement::one(ring));
  for (int n = 1; n < order; ++n) {
    log.set_coefficient({n + 1}, GradedElement::generator(ring, "CP" + std::to_string(n)).scaled(Rational(1, n + 1)));
  }
  return fgl_from_log(log);
}

namespace {

Classification classify_with(std::vector<GradedElement> images, const RingPtr& target, int order,
                             const FormalGroupLaw* expected) {
  const auto univ = universal_fgl_rational(order);
  RingMap theta(univ.ring(), target, std::move(images));
  FormalGroupLaw image(theta.apply(univ.series()));
  Classification c{std::move(theta), std::move(image), true, {}};
  if (expected) {
    if (auto d = first_difference(c.image.series(), expected->with_order(order).series())) {
      c.matches = false;
      c.mismatch = d->first + ": " + d->second;
    }
  }
  return c;
}

}  // namespace

Classification quillen_classify(const FormalGroupLaw& g) {
  if (g.ring()->base() != algebra::Base::rationals) throw DomainError("cannot classify over this base");
  if (g.order() < 2) throw DomainError("order must be at least 2");
  const auto log = fgl_log(g);
  std::vector<GradedElement> images;
  for (int n = 1; n < g.order(); ++n) images.push_back(log.coefficient(n + 1).scaled(n + 1));
  return classify_with(std::move(images), g.ring(), g.order(), &g);
}

Classification quillen_classify(const genera::GenusTable& table, int order) {
  if (order < 2) throw DomainError("order must be at least 2");
  std::vector<GradedElement> images;
  for (int n = 1; n < order; ++n) {
    auto it = table.values.find(n);
    if (it == table.values.end()) throw DomainError("genus table lacks CP" + std::to_string(n));
    images.push_back(it->second);
  }
  return classify_with(std::move(images), table.phi.ring(), order, nullptr);
}

TruncatedSeries n_series(const FormalGroupLaw& f, int m) {
  if (m < 1) throw DomainError("n-series needs m >= 1");
  const auto x = TruncatedSeries::variable(f.ring(), x_only(), f.order(), "x");
  auto s = x;
  for (int k = 2; k <= m; ++k) s = f.apply(s, x);
  return s;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

TruncatedSeries p_series(const FormalGroupLaw& f, int p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  return n_series(f, p);
}

namespace {

LandweberVerdict check_prime(const FormalGroupLaw& f, int p, int stages) {
  LandweberVerdict v;
  v.prime = p;
  const auto& ring = f.ring();
  const std::string through = "exact-through-stage-" + std::to_string(stages);
  if (ring->base() == algebra::Base::rationals) {
    v.stages.push_back({0, std::to_string(p), "unit"});
    for (int n = 1; n <= stages; ++n) v.stages.push_back({n, "0", "vacuous"});
    v.verdict = through;
    v.reason = "p is invertible over Q, so every quotient is the zero ring";
    return v;
  }
  v.stages.push_back({0, std::to_string(p), "regular"});

  long long needed = 1;
  for (int n = 0; n < stages; ++n) needed *= p;
  std::optional<TruncatedSeries> ps;
  int available = f.order();
  if (f.order() >= needed) {
    ps = p_series(f, p);
  } else if (f.polynomial() && needed <= (1 << 12)) {
    ps = p_series(f.with_order(static_cast<int>(needed)), p);
    available = static_cast<int>(needed);
  } else if (f.order() >= p) {
    ps = p_series(f, p);
  }

  std::vector<Exponent> ideal;  // monomial ideal over the non-invertible generators
  bool zero_ring = false, monomial = true;
  long long pn = 1;
  for (int n = 1; n <= stages; ++n) {
    pn *= p;
    if (zero_ring) {
      v.stages.push_back({n, "0", "vacuous"});
      continue;
    }
    if (!monomial) {
      v.stages.push_back({n, "?", "undecided"});
      v.verdict = "inconclusive";
      v.reason = "the quotient is no longer a monomial quotient";
      return v;
    }
    if (!ps || pn > available) {
      v.stages.push_back({n, "?", "undecided"});
      v.verdict = "inconclusive";
      v.reason = "truncation order " + std::to_string(f.order()) + " is below p^" + std::to_string(n);
      return v;
    }
    // v_n reduced modulo p and the monomial ideal.
    GradedElement::Terms reduced;
    const auto vn = ps->coefficient(static_cast<int>(pn));
    for (const auto& [e, c] : vn.terms()) {
      const Rational r = mod_p(c, p);
      if (r == 0) continue;
      Exponent core = e;
      for (std::size_t i = 0; i < core.size(); ++i) {
        if (ring->generator(i).invertible) core[i] = 0;
      }
      if (in_ideal(ideal, core)) continue;
      reduced[e] = r;
    }
    std::string text;
    {
      auto qring = algebra::make_ring(ring->generators(), algebra::Base::rationals, ring->window());
      text = GradedElement(qring, reduced).to_string();
    }
    if (reduced.empty()) {
      v.stages.push_back({n, text, "zero-divisor"});
      v.verdict = "fails-at-stage-" + std::to_string(n);
      v.reason = "v_" + std::to_string(n) + " vanishes on a nonzero quotient";
      return v;
    }
    if (reduced.size() > 1) {
      if (ideal.empty()) {
        // A nonzero element of a polynomial (or Laurent) domain over F_p.
        v.stages.push_back({n, text, "regular"});
        monomial = false;
        continue;
      }
      v.stages.push_back({n, text, "undecided"});
      v.verdict = "inconclusive";
      v.reason = "v_" + std::to_string(n) + " is not a monomial";
      return v;
    }
    Exponent core = reduced.begin()->first;
    bool unit = true;
    for (std::size_t i = 0; i < core.size(); ++i) {
      if (ring->generator(i).invertible) core[i] = 0;
      if (core[i] != 0) unit = false;
    }
    if (unit) {
      v.stages.push_back({n, text, "unit"});
      zero_ring = true;
      continue;
    }
    if (!monomial_regular(ideal, core)) {
      v.stages.push_back({n, text, "zero-divisor"});
      v.verdict = "fails-at-stage-" + std::to_string(n);
      v.reason = "v_" + std::to_string(n) + " is a zero-divisor modulo the previous terms";
      return v;
    }
    v.stages.push_back({n, text, "regular"});
    ideal.push_back(core);
  }
  v.verdict = through;
  v.reason = zero_ring ? "a unit v_n makes every later quotient zero" : "every v_n is regular";
  return v;
}

}  // namespace

std::vector<LandweberVerdict> landweber_check(const FormalGroupLaw& f, const std::vector<int>& primes, int stages) {
  if (stages < 0) throw DomainError("negative stage count");
  std::vector<LandweberVerdict> out;
  for (int p : primes) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    out.push_back(check_prime(f, p, stages));
  }
  return out;
}

FormalGroupLaw named_fgl(std::string_view name, int order) {
  using algebra::Base;
  if (name == "additive") return FormalGroupLaw::parse(algebra::integers_ring(), order, "x + y", true);
  if (name == "multiplicative") return FormalGroupLaw::parse(algebra::integers_ring(), order, "x + y - x*y", true);
  if (name == "mult-u") {
    return FormalGroupLaw::parse(algebra::make_ring({{"u", -2}}, Base::integers), order, "x + y - u*x*y", true);
  }
  if (name == "mult-laurent") {
    return FormalGroupLaw::parse(algebra::make_ring({{"u", -2, true}}, Base::integers), order, "x + y - u*x*y", true);
  }
  if (name == "mult-laurent-q") {
    return FormalGroupLaw::parse(algebra::make_ring({{"u", -2, true}}, Base::rationals), order, "x + y - u*x*y", true);
  }
  if (name == "universal") return universal_fgl_rational(order);
  throw DomainError("unknown formal group law '" + std::string(name) + "'");
}

std::vector<std::string> named_fgl_names() {
  return {"additive", "multiplicative", "mult-u", "mult-laurent", "mult-laurent-q", "universal"};
}

}  // namespace cobord::fgl
