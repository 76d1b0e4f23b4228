#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"

#include "cobord/algebra/io.hpp"
#include "cobord/chernweil/suite.hpp"
#include "cobord/fgl/fgl.hpp"
#include "cobord/fgl/tor.hpp"
#include "cobord/formcalc/form.hpp"
#include "cobord/genera/genera.hpp"

using namespace cobord;
using namespace cobord::algebra;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget;
  std::function<Verdict()> run;
};

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.empty()) failures_ = what;
    if (!ok) ++failed_;
  }
  void bound(double value, double tol, const std::string& what) {
    if (value > worst_ratio_ * tol) worst_ratio_ = value / tol;
    std::ostringstream s;
    s << what << " residual " << value << " > " << tol;
    expect(value <= tol, s.str());
  }
  Verdict verdict() const {
    std::ostringstream s;
    s << checks_ - failed_ << "/" << checks_ << " checks";
    if (worst_ratio_ > 0) s << ", worst residual/tol " << worst_ratio_;
    if (!failures_.empty()) s << ", first failure: " << failures_;
    return {failed_ == 0, s.str()};
  }

 private:
  int checks_ = 0;
  int failed_ = 0;
  double worst_ratio_ = 0;
  std::string failures_;
};

genera::CharacteristicSeries phi_from_dense(const oracle::Dense& d, int order) {
  std::vector<GradedElement> cs;
  for (const auto& q : d) cs.push_back(GradedElement::constant(rationals_ring(), q));
  return genera::CharacteristicSeries(TruncatedSeries::from_coefficients(rationals_ring(), genera::z_variable(), order, cs));
}

oracle::Dense random_dense(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 6);
  oracle::Dense d{1};
  for (int k = 1; k <= order; ++k) d.push_back(oracle::Q(num(rng), den(rng)));
  for (auto& q : d) q.canonicalize();
  return d;
}

GradedElement q_const(const oracle::Q& q) { return GradedElement::constant(rationals_ring(), q); }

Verdict genus_tables() {
  Tally t;
  const auto todd = genera::builtin_genus("todd", 8);
  for (int n = 1; n <= 8; ++n) {
    const auto g = genera::genus_cpn(todd, n);
    t.expect(g.is_one(), "Todd(CP" + std::to_string(n) + ")");
    t.expect(g == q_const(oracle::genus_of_cpn(oracle::todd_normal(8), n)), "Todd oracle " + std::to_string(n));
  }
  const auto l = genera::builtin_genus("l_genus", 8);
  for (int k = 1; k <= 4; ++k) {
    const auto g = genera::genus_cpn(l, 2 * k);
    t.expect(g.is_one(), "L(CP" + std::to_string(2 * k) + ")");
    t.expect(g == q_const(oracle::genus_of_cpn(oracle::tanh_over_z(8), 2 * k)), "L oracle");
  }
  const auto a = genera::genus_cpn(genera::builtin_genus("a_hat", 2), 2);
  t.expect(a == q_const(oracle::Q(-1, 8)), "A-hat(CP2)");
  t.expect(oracle::genus_of_cpn(oracle::sinh_half_over_half(2), 2) == oracle::Q(-1, 8), "A-hat oracle");
  const auto one = phi_from_dense({1}, 8);
  for (int n = 1; n <= 8; ++n) t.expect(genera::genus_cpn(one, n).is_zero(), "phi = 1 on CP" + std::to_string(n));
  return t.verdict();
}

Verdict cross_route() {
  Tally t;
  for (const char* name : {"todd", "l_genus", "a_hat"}) {
    const auto phi = genera::builtin_genus(name, 6);
    for (int n = 1; n <= 6; ++n) {
      t.expect(genera::genus_cpn(phi, n) == genera::genus_cpn_via_chern(phi, n), std::string(name) + " CP" + std::to_string(n));
    }
  }
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = random_dense(rng, 6);
    const auto phi = phi_from_dense(d, 6);
    for (int n = 1; n <= 6; ++n) {
      const auto g = genera::genus_cpn(phi, n);
      t.expect(g == genera::genus_cpn_via_chern(phi, n), "random phi " + std::to_string(trial));
      t.expect(g == q_const(oracle::genus_of_cpn(d, n)), "random phi oracle " + std::to_string(trial));
    }
  }
  return t.verdict();
}

Verdict sequence_properties() {
  Tally t;
  const int w = 6;
  const Rational lambda(3, 2);
  std::vector<SeriesVariable> vars;
  for (int i = 1; i <= 3; ++i) vars.push_back({"c" + std::to_string(i), 2 * i});
  for (int i = 1; i <= 3; ++i) vars.push_back({"d" + std::to_string(i), 2 * i});
  auto q = rationals_ring();
  auto var = [&](const std::string& name) { return TruncatedSeries::variable(q, vars, w, name); };
  std::vector<TruncatedSeries> c, d;
  for (int i = 1; i <= 3; ++i) {
    c.push_back(var("c" + std::to_string(i)));
    d.push_back(var("d" + std::to_string(i)));
  }
  // Total Chern class of the sum: e_k = sum_i c_i d_{k-i}.
  std::vector<TruncatedSeries> e;
  for (int k = 1; k <= 6; ++k) {
    TruncatedSeries s(q, vars, w);
    for (int i = 0; i <= k; ++i) {
      const int j = k - i;
      if (i > 3 || j > 3) continue;
      if (i == 0) s += d[static_cast<std::size_t>(j - 1)];
      else if (j == 0) s += c[static_cast<std::size_t>(i - 1)];
      else s += c[static_cast<std::size_t>(i - 1)] * d[static_cast<std::size_t>(j - 1)];
    }
    e.push_back(s);
  }

  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const auto dense = random_dense(rng, w);
    const auto k = genera::k_phi(phi_from_dense(dense, w), w);
    oracle::Dense scaled = dense;
    mpq_class p = 1;
    for (auto& x : scaled) {
      x *= p;
      p *= mpq_class(3, 2);
    }
    const auto ks = genera::k_phi(phi_from_dense(scaled, w), w);
    bool homogeneous = true;
    for (const auto& [ex, coef] : k.total.coefficients()) {
      Rational f = 1;
      for (int i = 0; i < k.total.weight(ex); ++i) f *= lambda;
      if (ks.total.coefficient(ex) != coef * GradedElement::constant(q, f)) homogeneous = false;
    }
    t.expect(homogeneous && ks.total.coefficients().size() == k.total.coefficients().size(),
             "homogeneity trial " + std::to_string(trial));
    const auto whole = genera::eval_sequence(k, e);
    t.expect(whole == genera::eval_sequence(k, c) * genera::eval_sequence(k, d), "Whitney trial " + std::to_string(trial));
  }
  return t.verdict();
}

Verdict quillen() {
  Tally t;
  const int order = 8;
  const auto todd = genera::genus_table(genera::builtin_genus("todd", order), order);
  const auto c = fgl::quillen_classify(todd, order);
  t.expect(c.image.series() == parse_series(rationals_ring(), fgl::FormalGroupLaw::variables(), order, "x + y - x*y"),
           "Todd image");
  const auto zero = genera::genus_table(phi_from_dense({1}, order), order);
  t.expect(fgl::quillen_classify(zero, order).image.series() ==
               parse_series(rationals_ring(), fgl::FormalGroupLaw::variables(), order, "x + y"),
           "zero genus image");
  return t.verdict();
}

Verdict landweber() {
  Tally t;
  for (const auto& v : fgl::landweber_check(fgl::named_fgl("additive", 4), {2, 3, 5}, 2)) {
    t.expect(v.verdict == "fails-at-stage-1", "additive p=" + std::to_string(v.prime) + " " + v.verdict);
  }
  for (const auto& v : fgl::landweber_check(fgl::named_fgl("mult-laurent", 4), {2, 3, 5}, 2)) {
    t.expect(v.verdict == "exact-through-stage-2", "laurent p=" + std::to_string(v.prime) + " " + v.verdict);
  }
  for (const auto& v : fgl::landweber_check(fgl::named_fgl("mult-u", 4), {2, 3, 5}, 2)) {
    t.expect(v.verdict == "fails-at-stage-2", "polynomial p=" + std::to_string(v.prime) + " " + v.verdict);
  }
  return t.verdict();
}

Verdict tor() {
  Tally t;
  auto ring = make_ring({{"x", -2}});
  const auto x = GradedElement::generator(ring, "x");
  auto q = rationals_ring();
  RingMap to_q(ring, q, {GradedElement::zero(q)});
  fgl::ModulePresentation free{ring, {0}, {}, {}};
  for (const auto& d : fgl::tor1(free, to_q, {-12, 0}).degrees) t.expect(d.dim == 0, "free module");
  fgl::ModulePresentation point{ring, {0}, {-2}, {{x}}};
  for (const auto& d : fgl::tor1(point, to_q, {-12, 0}).degrees) {
    t.expect(d.dim == (d.degree == -2 ? 1u : 0u), "Q over Q[x] degree " + std::to_string(d.degree));
  }
  fgl::ModulePresentation dual{ring, {0}, {-4}, {{x * x}}};
  for (const auto& d : fgl::tor1(dual, to_q, {-12, 0}).degrees) {
    t.expect(d.dim == (d.degree == -4 ? 1u : 0u), "Q[x]/(x^2) degree " + std::to_string(d.degree));
  }
  return t.verdict();
}

std::vector<formcalc::Mask> all_masks(int dim) {
  std::vector<formcalc::Mask> out;
  for (formcalc::Mask m = 0; m < (formcalc::Mask{1} << dim); ++m) out.push_back(m);
  return out;
}

Verdict exterior_calculus() {
  using namespace formcalc;
  Tally t;
  std::mt19937_64 rng(41);
  auto c = make_coefficients(make_ring({{"phi1", -2}}), {-4, 0});
  std::vector<std::size_t> coefs;
  for (std::size_t i = 0; i < c->dim(); ++i) coefs.push_back(i);
  const int n = 32;
  auto t3 = Mesh::torus(3, n);
  auto cyl = Mesh::make({{FactorKind::interval, n, "t"}, {FactorKind::circle, n, "x"}, {FactorKind::circle, n, "y"}});

  auto w = random_form(t3, c, all_masks(3), coefs, rng, 2);
  t.bound(max_abs(exterior_d(exterior_d(w))), 1e-8, "d d on T3");
  auto wi = random_form(cyl, c, all_masks(3), coefs, rng, 2);
  t.bound(max_abs(exterior_d(exterior_d(wi))), 1e-6, "d d on the cylinder");

  auto homogeneous = [&](const MeshPtr& m, int k) {
    std::vector<Mask> masks;
    for (Mask x : all_masks(m->dim())) {
      if (mask_degree(x) == k) masks.push_back(x);
    }
    return random_form(m, c, masks, coefs, rng, 2);
  };
  for (int k = 0; k <= 2; ++k) {
    for (const auto& [m, tol] : {std::pair{t3, 1e-8}, std::pair{cyl, 1e-6}}) {
      auto a = homogeneous(m, k);
      auto b = homogeneous(m, 1);
      const double sign = k % 2 == 0 ? 1.0 : -1.0;
      auto r = exterior_d(wedge(a, b)) - wedge(exterior_d(a), b) - sign * wedge(a, exterior_d(b));
      t.bound(max_abs(r), tol, "Leibniz degree " + std::to_string(k));
    }
  }

  t.bound(max_abs(fiber_integrate(exterior_d(w), 1) - exterior_d(fiber_integrate(w, 1))), 1e-8, "Stokes, circle fiber");
  t.bound(max_abs(fiber_integrate(exterior_d(w), 2) - exterior_d(fiber_integrate(w, 2))), 1e-8, "Stokes, torus fiber");
  t.bound(max_abs(fiber_integrate(fiber_integrate(w, 1), 1) - fiber_integrate(w, 2)), 1e-8, "Fubini");
  t.bound(max_abs(fiber_integrate(fiber_integrate(w, 1), 2) - fiber_integrate(w, 3)), 1e-8, "Fubini, full torus");

  auto lhs = exterior_d(fiber_integrate_interval(wi)) + fiber_integrate_interval(exterior_d(wi));
  auto rhs = restrict_interval(wi, n) - restrict_interval(wi, 0);
  t.bound(max_abs(lhs - rhs), 1e-6, "interval homotopy formula");
  return t.verdict();
}

const chernweil::IdentityResult* find(const chernweil::SuiteReport& r, const std::string& name) {
  for (const auto& x : r.results) {
    if (x.name == name) return &x;
  }
  return nullptr;
}

void pinned(Tally& t, const chernweil::SuiteReport& r, const std::string& name, double tol) {
  const auto* x = find(r, name);
  t.expect(x != nullptr, "missing identity " + name);
  if (x) t.bound(x->residual, tol, r.demo + ": " + name);
}

Verdict chern_weil() {
  Tally t;
  auto cfg = chernweil::demo_config("t2-line");
  t.expect(cfg.charges == std::vector<int>{-3, -2, -1, 0, 1, 2, 3}, "charge list");
  const auto r = chernweil::run_suite(cfg, {"chern", "transgression"});
  pinned(t, r, "integral of c1 over T2 equals the charge", 1e-10);
  pinned(t, r, "Whitney formula for phi", 1e-8);
  pinned(t, r, "c1 additive on block sums", 1e-8);
  pinned(t, r, "d transgression = phi(nabla1) - phi(nabla0)", 1e-6);
  pinned(t, r, "A(o) invariant under homotopy", 1e-6);
  return t.verdict();
}

Verdict identity_suite() {
  Tally t;
  for (const auto& name : chernweil::demo_names()) {
    const auto r = chernweil::run_suite(chernweil::demo_config(name), {"pushforward", "axioms"});
    for (const char* id : {"square a: p_! a(omega) = a(int A(o) omega)", "square T: T(p_! x) = int phi(nu) T(x)",
                           "square R: R(p_! x) = int A(o) R(x)", "square I: R(p_! x) = int phi(nu) R(x) mod exact",
                           "two-stage push-forward curvature", "two-stage push-forward alpha mod exact",
                           "projection formula curvature", "projection formula alpha periods",
                           "product alpha rewriting mod exact", "R(a(omega)) = d omega", "a(omega) cup x = a(omega R(x))"}) {
      pinned(t, r, id, 1e-6);
    }
  }
  return t.verdict();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "genus tables", 2, genus_tables},
      {2, "cross-route genus equality", 5, cross_route},
      {3, "multiplicative sequence properties", 5, sequence_properties},
      {4, "Quillen classification", 5, quillen},
      {5, "Landweber verdicts", 5, landweber},
      {6, "Tor_1 tables", 2, tor},
      {7, "exterior calculus at N = 32", 10, exterior_calculus},
      {8, "Chern-Weil forms", 20, chern_weil},
      {9, "identity suite", 60, identity_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = v.pass && secs < c.budget;
    if (!ok) ++failed;
    std::printf("criterion %d %-36s %s  %.2f s (budget %.0f s)  %s\n", c.id, c.title.c_str(), ok ? "PASS" : "FAIL", secs,
                c.budget, v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
