#include "cobord/genera/genera.hpp"

#include <algorithm>
#include <charconv>

#include "cobord/algebra/ring_map.hpp"
#include "cobord/error.hpp"

namespace cobord::genera {

using algebra::Exponent;
using algebra::SeriesVariable;

namespace {

using Partition = std::vector<int>;  // weakly decreasing

void partitions_rec(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

// Partitions of n in decreasing lex order, starting with (n).
std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

Partition conjugate(const Partition& p) {
  Partition c(p.empty() ? 0 : p.front(), 0);
  for (int part : p) {
    for (int j = 0; j < part; ++j) ++c[j];
  }
  return c;
}

// Number of 0-1 matrices with the given row sums and column sums. This is the
// coefficient of m_mu in the product e_nu = e_{nu_1} e_{nu_2} ...
class ZeroOneCounter {
 public:
  algebra::Rational count(const Partition& rows, Partition cols) {
    memo_.clear();
    rows_ = rows;
    return rec(0, std::move(cols));
  }

 private:
  algebra::Rational rec(std::size_t row, Partition cols) {
    std::sort(cols.begin(), cols.end(), std::greater<>());
    while (!cols.empty() && cols.back() == 0) cols.pop_back();
    if (row == rows_.size()) return cols.empty() ? 1 : 0;
    auto key = cols;
    key.push_back(-static_cast<int>(row) - 1);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    algebra::Rational total = 0;
    choose(row, cols, 0, rows_[row], total);
    memo_.emplace(std::move(key), total);
    return total;
  }

  void choose(std::size_t row, Partition& cols, std::size_t from, int need, algebra::Rational& total) {
    if (need == 0) {
      total += rec(row + 1, cols);
      return;
    }
    for (std::size_t j = from; j < cols.size(); ++j) {
      if (cols.size() - j < static_cast<std::size_t>(need)) break;
      if (cols[j] == 0) continue;
      --cols[j];
      choose(row, cols, j + 1, need - 1, total);
      ++cols[j];
    }
  }

  Partition rows_;
  std::map<Partition, algebra::Rational> memo_;
};

void check_chern_degree(const GradedElement& c, int i) {
  if (c.ring()->size() == 0 || c.is_zero()) return;
  const auto d = c.degree();
  if (!d || *d != 2 * i) {
    throw MismatchError("Chern value c" + std::to_string(i) + " must be homogeneous of degree " +
                        std::to_string(2 * i));
  }
}

TruncatedSeries z_series(const RingPtr& ring, int order) {
  return TruncatedSeries::variable(ring, {z_variable()}, order, "z");
}

// (e^{cz} - e^{-cz}) / z truncated at the given order.
TruncatedSeries odd_exp_over_z(const RingPtr& ring, int order, const Rational& c) {
  const auto z = z_series(ring, order + 1).scaled(c);
  return (algebra::exp(z) - algebra::exp(-z)).shifted({-1});
}

CharacteristicSeries elliptic_formal(int order) {
  auto ring = algebra::make_ring({{"delta", -4}, {"eps", -8}});
  const auto z = z_series(ring, order + 1);
  const auto z2 = z * z;
  auto q = TruncatedSeries::one(ring, {z_variable()}, order + 1);
  q -= z2.scaled(GradedElement::generator(ring, "delta").scaled(2));
  q += (z2 * z2).scaled(GradedElement::generator(ring, "eps"));
  // l(z) = integral of q^{-1/2}; phi = l^{-1}(z) / z.
  const auto dl = algebra::rational_power(q, Rational(-1, 2)).truncated(order);
  const auto l = dl.integral(0);
  return CharacteristicSeries(algebra::reversion(l).shifted({-1}), "elliptic");
}

}  // namespace

CharacteristicSeries::CharacteristicSeries(TruncatedSeries phi, std::string label)
    : phi_(std::move(phi)), label_(std::move(label)) {
  if (phi_.variables().size() != 1 || phi_.variables()[0].degree != 2) {
    throw DomainError("characteristic series must be in one variable of degree 2");
  }
  if (!phi_.constant_term().is_one()) throw DomainError("characteristic series must have constant term 1");
  if (ring()->size() == 0) return;
  for (const auto& [e, c] : phi_.coefficients()) {
    const auto d = c.degree();
    if (!d || *d != -2 * e[0]) {
      throw DomainError("coefficient of z^" + std::to_string(e[0]) + " must be homogeneous of degree " +
                        std::to_string(-2 * e[0]));
    }
  }
}

TruncatedSeries tangential(const CharacteristicSeries& phi) { return algebra::invert(phi.series()); }

SeriesVariable z_variable() { return {"z", 2}; }

std::vector<SeriesVariable> MultiplicativeSequence::chern_variables(int n) {
  std::vector<SeriesVariable> vars;
  for (int i = 1; i <= n; ++i) vars.push_back({"c" + std::to_string(i), 2 * i});
  return vars;
}

TruncatedSeries MultiplicativeSequence::component(int n) const {
  TruncatedSeries part(ring, total.variables(), max_weight);
  for (const auto& [e, c] : total.coefficients()) {
    if (total.weight(e) == n) part.set_coefficient(e, c);
  }
  return part;
}

MultiplicativeSequence k_phi(const CharacteristicSeries& phi, int max_weight) {
  if (max_weight < 1) throw DomainError("weight bound must be at least 1");
  if (phi.order() < max_weight) throw DomainError("characteristic series order is below the weight bound");
  const auto& ring = phi.ring();
  const auto vars = MultiplicativeSequence::chern_variables(max_weight);
  auto total = TruncatedSeries::one(ring, vars, max_weight);
  ZeroOneCounter counter;
  for (int n = 1; n <= max_weight; ++n) {
    const auto parts = partitions(n);
    // Coefficient of the monomial symmetric function m_lambda in prod phi(z_i).
    std::map<Partition, GradedElement> rest;
    for (const auto& lambda : parts) {
      auto c = GradedElement::one(ring);
      for (int p : lambda) c *= phi.coefficient(p);
      rest.emplace(lambda, std::move(c));
    }
    // Peel off leading terms: e_{mu'} has leading monomial m_mu.
    for (const auto& mu : parts) {
      const GradedElement lead = rest.at(mu);
      if (lead.is_zero()) continue;
      const auto nu = conjugate(mu);
      for (const auto& lambda : parts) {
        const auto k = counter.count(nu, lambda);
        if (k != 0) rest.at(lambda) -= lead.scaled(k);
      }
      Exponent e(static_cast<std::size_t>(max_weight), 0);
      for (int p : nu) ++e[static_cast<std::size_t>(p - 1)];
      total.set_coefficient(e, lead);
    }
  }
  return {ring, max_weight, std::move(total)};
}

GradedElement eval_sequence(const MultiplicativeSequence& k, const std::vector<GradedElement>& chern) {
  for (std::size_t i = 0; i < chern.size(); ++i) {
    if (!algebra::same_ring(chern[i].ring(), k.ring)) throw MismatchError("Chern values live in another ring");
    check_chern_degree(chern[i], static_cast<int>(i) + 1);
  }
  auto result = GradedElement::zero(k.ring);
  for (const auto& [e, c] : k.total.coefficients()) {
    GradedElement term = c;
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
      if (e[i] == 0) continue;
      if (i >= chern.size()) {
        term = GradedElement::zero(k.ring);
      } else {
        term *= chern[i].pow(static_cast<unsigned>(e[i]));
      }
    }
    result += term;
  }
  return result;
}

TruncatedSeries eval_sequence(const MultiplicativeSequence& k, const std::vector<TruncatedSeries>& chern) {
  if (chern.empty()) throw DomainError("no Chern values supplied");
  std::vector<TruncatedSeries> images;
  for (int i = 0; i < k.max_weight; ++i) {
    if (static_cast<std::size_t>(i) < chern.size()) {
      images.push_back(chern[static_cast<std::size_t>(i)]);
    } else {
      images.emplace_back(chern[0].ring(), chern[0].variables(), chern[0].order());
    }
  }
  if (!algebra::same_ring(chern[0].ring(), k.ring)) throw MismatchError("Chern values live in another ring");
  return algebra::substitute(k.total, images);
}

GradedElement genus_cpn(const CharacteristicSeries& phi, int n) {
  if (n < 0) throw DomainError("negative index");
  if (phi.order() < n) throw DomainError("characteristic series order " + std::to_string(phi.order()) +
                                         " is too small for CP^" + std::to_string(n));
  return algebra::invert(phi.series().truncated(n)).pow(static_cast<unsigned>(n + 1)).coefficient(n);
}

GradedElement genus_cpn_via_chern(const CharacteristicSeries& phi, int n) {
  if (n < 0) throw DomainError("negative index");
  if (phi.order() < n) throw DomainError("characteristic series order " + std::to_string(phi.order()) +
                                         " is too small for CP^" + std::to_string(n));
  if (n == 0) return GradedElement::one(phi.ring());
  const auto k = k_phi(phi, n);
  // Total Chern class of the stable normal bundle of CP^n in R[a]/(a^{n+1}).
  const std::vector<SeriesVariable> avar{{"a", 2}};
  const auto a = TruncatedSeries::variable(phi.ring(), avar, n, "a");
  const auto c = algebra::invert((TruncatedSeries::one(phi.ring(), avar, n) + a).pow(static_cast<unsigned>(n + 1)));
  std::vector<TruncatedSeries> classes;
  for (int i = 1; i <= n; ++i) {
    TruncatedSeries ci(phi.ring(), avar, n);
    ci.set_coefficient({i}, c.coefficient(i));
    classes.push_back(std::move(ci));
  }
  return eval_sequence(k, classes).coefficient(n);
}

CharacteristicSeries builtin_genus(std::string_view name, int order) {
  if (order < 0) throw DomainError("negative order");
  const auto q = algebra::rationals_ring();
  if (name == "todd") {
    const auto z = z_series(q, order + 1);
    return CharacteristicSeries((TruncatedSeries::one(q, {z_variable()}, order + 1) - algebra::exp(-z)).shifted({-1}),
                                "todd");
  }
  if (name == "l_genus") {
    const auto sinh_over_z = odd_exp_over_z(q, order, Rational(1)).scaled(Rational(1, 2));
    const auto z = z_series(q, order);
    const auto cosh = (algebra::exp(z) + algebra::exp(-z)).scaled(Rational(1, 2));
    return CharacteristicSeries(sinh_over_z * algebra::invert(cosh), "l_genus");
  }
  if (name == "a_hat") return CharacteristicSeries(odd_exp_over_z(q, order, Rational(1, 2)), "a_hat");
  if (name == "elliptic") return elliptic_formal(order);
  if (name.starts_with("elliptic(") && name.ends_with(")")) {
    const auto inner = name.substr(9, name.size() - 10);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw ParseError("elliptic parameters must be elliptic(delta,eps)");
    auto trim = [](std::string_view s) {
      while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
      while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
      return std::string(s);
    };
    const Rational delta = algebra::parse_rational(trim(inner.substr(0, comma)));
    const Rational eps = algebra::parse_rational(trim(inner.substr(comma + 1)));
    const auto formal = elliptic_formal(order);
    const std::map<std::string, Rational> values{{"delta", delta}, {"eps", eps}};
    auto phi = formal.series().map_coefficients(
        q, [&](const GradedElement& c) { return algebra::specialize(c, q, values); });
    return CharacteristicSeries(std::move(phi), std::string(name));
  }
  throw DomainError("unknown genus '" + std::string(name) + "'");
}

std::vector<std::string> builtin_genus_names() { return {"todd", "l_genus", "a_hat", "elliptic"}; }

GenusTable genus_table(const CharacteristicSeries& phi, int max_n) {
  GenusTable t{phi, {}};
  for (int n = 1; n <= max_n; ++n) t.values.emplace(n, genus_cpn(phi, n));
  return t;
}

RingPtr cobordism_ring(int n) {
  std::vector<algebra::Generator> gens;
  for (int k = 1; k <= n; ++k) gens.push_back({"CP" + std::to_string(k), -2 * k, false});
  return algebra::make_ring(std::move(gens));
}

std::optional<int> cpn_index(std::string_view name) {
  if (!name.starts_with("CP") || name.size() == 2) return std::nullopt;
  int k = 0;
  const auto* first = name.data() + 2;
  const auto* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, k);
  if (ec != std::errc() || ptr != last || k < 1) return std::nullopt;
  return k;
}

GradedElement genus_extend(const GenusTable& table, const GradedElement& expr) {
  const auto& src = *expr.ring();
  std::vector<const GradedElement*> images;
  for (const auto& g : src.generators()) {
    const auto k = cpn_index(g.name);
    if (!k || g.invertible) throw DomainError("'" + g.name + "' is not a [CPn] generator");
    const auto it = table.values.find(*k);
    images.push_back(it == table.values.end() ? nullptr : &it->second);
  }
  const auto& ring = table.phi.ring();
  auto result = GradedElement::zero(ring);
  for (const auto& [e, c] : expr.terms()) {
    auto term = GradedElement::constant(ring, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!images[i]) throw DomainError(src.generator(i).name + " is outside the genus table range");
      term *= images[i]->pow(static_cast<unsigned>(e[i]));
    }
    result += term;
  }
  return result;
}

}  // namespace cobord::genera
