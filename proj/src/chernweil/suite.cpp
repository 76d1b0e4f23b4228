#include "cobord/chernweil/suite.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cobord/chernweil/cycles.hpp"
#include "cobord/error.hpp"

namespace cobord::chernweil {

using formcalc::CoefficientSpace;
using formcalc::ExactComparison;
using formcalc::FactorKind;
using formcalc::Mesh;

namespace {

struct Data {
  const DemoConfig& cfg;
  Theory th;
  std::mt19937_64 rng;
  std::size_t next_charge = 0;
  std::vector<IdentityResult>& out;
  std::string group;

  MeshPtr torus(int dim, const std::string& prefix) const { return Mesh::torus(dim, cfg.n, prefix); }

  MeshPtr times_circles(const MeshPtr& m, int count, const std::string& prefix) const {
    return formcalc::product_mesh(*m, *torus(count, prefix));
  }

  MeshPtr cylinder(const MeshPtr& m) const {
    std::vector<formcalc::Factor> f{{FactorKind::interval, cfg.interval_n, "t"}};
    f.insert(f.end(), m->factors().begin(), m->factors().end());
    return Mesh::make(std::move(f));
  }

  int charge() { return cfg.charges.empty() ? 0 : cfg.charges[next_charge++ % cfg.charges.size()]; }

  GeometricBundle line(const MeshPtr& m) {
    const int n = charge();
    const auto a = random_real_one_form(m, rng, 0.3);
    if (m->dim() < 2 || n == 0) return GeometricBundle::line(m, SampledForm(m, CoefficientSpace::real()), a);
    return GeometricBundle::line(m, charge_form(m, n, 0, m->dim() - 1), a);
  }

  SampledForm homogeneous(const MeshPtr& m, int degree, double scale = 0.5) {
    const auto& c = th.coeffs();
    SampledForm f(m, c);
    for (Mask mask = 0; mask < (Mask{1} << m->dim()); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < c->dim(); ++i) {
        if (c->degree(i) + formcalc::mask_degree(mask) == degree) idx.push_back(i);
      }
      if (!idx.empty()) f += formcalc::random_form(m, c, {mask}, idx, rng);
    }
    return scale * f;
  }

  SmoothOrientationDatum orientation(const MeshPtr& base, int fiber) {
    const auto total = times_circles(base, fiber, "f");
    return {base, fiber, line(total), homogeneous(total, -1, 0.3)};
  }

  SmoothCycleDatum cycle(const MeshPtr& base, int fiber) {
    const auto total = times_circles(base, fiber, "g");
    return make_cycle(base, fiber, line(total), homogeneous(base, -fiber - 1));
  }

  void record(const std::string& name, double residual, double tol) { out.push_back({group, name, residual, tol}); }
  void record_exact(const std::string& name, const ExactComparison& c, double tol) {
    record(name, std::max(c.closed_residual, c.period_residual), tol);
  }
};

double max_diff(const SampledForm& a, const SampledForm& b) { return formcalc::max_abs(a - b); }

void chern_group(Data& d) {
  const auto& cfg = d.cfg;
  const auto t2 = d.torus(2, "x");
  double worst = 0;
  for (int n : cfg.charges) {
    const auto a = random_real_one_form(t2, d.rng, 0.3);
    const auto b = GeometricBundle::line(t2, charge_form(t2, n, 0, 1), a);
    check_bundle(b, cfg.exact_tol);
    const auto c1 = chern_forms(b, 1).c[1];
    worst = std::max(worst, std::abs(formcalc::periods(c1, cfg.exact_tol)[3].value[0] - n));
  }
  d.record("integral of c1 over T2 equals the charge", worst, cfg.period_tol);

  const auto v = d.torus(std::min(cfg.base_dim + cfg.fiber_dim, 4), "x");
  const auto trivial = phi_form(GeometricBundle::trivial(v, 2), d.th);
  d.record("trivial bundle has phi = 1", max_diff(trivial, SampledForm::one(v, d.th.coeffs())), cfg.exact_tol);

  const auto b1 = random_unitary_bundle(v, 2, d.rng);
  const auto b2 = d.line(v);
  const auto sum = direct_sum(b1, b2);
  const int w = std::min(v->dim() / 2, 3);
  const auto cs = chern_forms(sum, w);
  double closed = 0;
  for (const auto& c : cs.c) closed = std::max(closed, formcalc::max_abs(formcalc::exterior_d(c)));
  const auto phi = phi_form(sum, d.th);
  closed = std::max(closed, formcalc::max_abs(formcalc::exterior_d(phi)));
  d.record("Chern and phi forms closed", closed, cfg.exact_tol);
  d.record("imaginary part of Chern traces", cs.imaginary, cfg.exact_tol);
  d.record("c1 additive on block sums", max_diff(cs.c[1], chern_forms(b1, 1).c[1] + chern_forms(b2, 1).c[1]), cfg.exact_tol);
  d.record("Whitney formula for phi", max_diff(phi, formcalc::wedge(phi_form(b1, d.th), phi_form(b2, d.th))), cfg.exact_tol);
}

void transgression_group(Data& d) {
  const auto& cfg = d.cfg;
  const auto h = d.torus(std::min(cfg.base_dim + cfg.fiber_dim, 3), "x");
  const auto cyl = d.cylinder(h);
  const auto b0 = d.line(h);
  auto b1 = b0;
  b1.set_connection(0, 0, {SampledForm(h, CoefficientSpace::real()), random_real_one_form(h, d.rng, 0.3)});
  const auto tr = transgression(linear_homotopy(b0, b1, cyl), d.th);
  d.record("d transgression = phi(nabla1) - phi(nabla0)",
           max_diff(formcalc::exterior_d(tr), phi_form(b1, d.th) - phi_form(b0, d.th)), cfg.tol);
  d.record("reversed homotopy negates the transgression",
           formcalc::max_abs(tr + transgression(linear_homotopy(b1, b0, cyl), d.th)), cfg.tol);
  d.record("constant homotopy has zero transgression", formcalc::max_abs(transgression(linear_homotopy(b0, b0, cyl), d.th)),
           cfg.tol);

  const auto base = d.torus(h->dim() - 1, "x");
  SmoothOrientationDatum o0{base, 1, b0, d.homogeneous(h, -1, 0.3)};
  SmoothOrientationDatum o1{base, 1, b1, o0.sigma + tr};
  d.record("A(o) invariant under homotopy", max_diff(orientation_a_form(o1, d.th), orientation_a_form(o0, d.th)), cfg.tol);
}

void pushforward_group(Data& d) {
  const auto& cfg = d.cfg;
  const auto a = d.torus(cfg.base_dim, "a");
  const auto op = d.orientation(a, cfg.fiber_dim);
  const auto& v = op.total();
  const auto phi_mu = phi_form(op.bundle, d.th);
  const auto ap = orientation_a_form(op, d.th);
  auto integrate = [&](const SampledForm& f) { return formcalc::fiber_integrate(f, cfg.fiber_dim); };

  const auto omega = d.homogeneous(v, -2);
  const auto left = pushforward_cycle(op, action_of_forms(omega, -1), d.th);
  const auto right = action_of_forms(integrate(formcalc::wedge(ap, omega)), left.degree);
  d.record_exact("square a: p_! a(omega) = a(int A(o) omega)", formcalc::compare_mod_exact(left.alpha, right.alpha), cfg.tol);

  const auto x = d.cycle(v, cfg.cycle_fiber_dim);
  const auto px = pushforward_cycle(op, x, d.th);
  d.record("square T: T(p_! x) = int phi(nu) T(x)",
           max_diff(cycle_t(px, d.th), integrate(formcalc::wedge(phi_mu, cycle_t(x, d.th)))), cfg.tol);
  d.record("square R: R(p_! x) = int A(o) R(x)",
           max_diff(cycle_r(px, d.th), integrate(formcalc::wedge(ap, cycle_r(x, d.th)))), cfg.tol);
  d.record_exact("square I: R(p_! x) = int phi(nu) R(x) mod exact",
                 formcalc::compare_mod_exact(cycle_r(px, d.th), integrate(formcalc::wedge(phi_mu, cycle_r(x, d.th)))),
                 cfg.tol);

  const auto o1 = d.orientation(a, cfg.compose_first);
  const auto o2 = d.orientation(o1.total(), cfg.compose_second);
  const auto oc = compose_orientations(o1, o2, d.th);
  const auto q = formcalc::projection(o2.total(), 0, o1.total()->dim());
  d.record("composite A(o) = A(o_q) q*A(o_p)",
           max_diff(orientation_a_form(oc, d.th),
                    formcalc::wedge(orientation_a_form(o2, d.th), formcalc::pullback(orientation_a_form(o1, d.th), q))),
           cfg.tol);
  const auto y = d.cycle(o2.total(), 0);
  const auto staged = pushforward_cycle(o1, pushforward_cycle(o2, y, d.th), d.th);
  const auto composed = pushforward_cycle(oc, y, d.th);
  d.record("two-stage push-forward curvature", max_diff(cycle_r(staged, d.th), cycle_r(composed, d.th)), cfg.tol);
  d.record_exact("two-stage push-forward alpha mod exact", formcalc::compare_mod_exact(staged.alpha, composed.alpha), cfg.tol);
}

void axioms_group(Data& d) {
  const auto& cfg = d.cfg;
  const auto a = d.torus(cfg.base_dim, "a");
  const auto op = d.orientation(a, cfg.fiber_dim);
  const auto& v = op.total();

  const auto omega = d.homogeneous(v, -1);
  const auto aw = action_of_forms(omega, 0);
  d.record("R(a(omega)) = d omega", max_diff(cycle_r(aw, d.th), formcalc::exterior_d(omega)), cfg.exact_tol);

  const auto x = d.cycle(v, cfg.cycle_fiber_dim);
  const auto cup = cup_cycles(aw, x, d.th);
  const auto direct = action_of_forms(formcalc::wedge(omega, cycle_r(x, d.th)), cup.degree);
  d.record_exact("a(omega) cup x = a(omega R(x))", formcalc::compare_mod_exact(cup.alpha, direct.alpha), cfg.tol);

  const auto xa = d.cycle(a, cfg.cycle_fiber_dim);
  const auto yv = d.cycle(v, 0);
  const auto p = formcalc::projection(v, 0, a->dim());
  const auto lhs = pushforward_cycle(op, cup_cycles(pullback_cycle(xa, p), yv, d.th), d.th);
  const auto rhs = cup_cycles(xa, pushforward_cycle(op, yv, d.th), d.th);
  d.record("projection formula curvature", max_diff(cycle_r(lhs, d.th), cycle_r(rhs, d.th)), cfg.tol);
  d.record("projection formula alpha periods", formcalc::compare_mod_exact(lhs.alpha, rhs.alpha).period_residual, cfg.tol);

  const auto yb = d.cycle(d.torus(cfg.base_dim, "b"), 0);
  const auto prod = product_cycles(xa, yb, d.th);
  d.record_exact("product alpha rewriting mod exact",
                 formcalc::compare_mod_exact(prod.alpha, product_alpha_symmetric(xa, yb, d.th)), cfg.tol);
  d.record("curvature of a product is R(x) x R(y)",
           max_diff(cycle_r(prod, d.th),
                    formcalc::wedge(formcalc::pullback(cycle_r(xa, d.th), formcalc::projection(prod.base, 0, a->dim())),
                                    formcalc::pullback(cycle_r(yb, d.th),
                                                       formcalc::projection(prod.base, a->dim(), cfg.base_dim)))),
           cfg.tol);

  const auto a2 = d.torus(std::max(cfg.base_dim, 2), "c");
  formcalc::CoordinateMap f{a2, a, std::vector<int>(static_cast<std::size_t>(cfg.base_dim), a2->dim() - 1)};
  const auto v2 = d.times_circles(a2, cfg.fiber_dim, "f");
  formcalc::CoordinateMap big{v2, v, f.factor_of};
  for (int i = 0; i < cfg.fiber_dim; ++i) big.factor_of.push_back(a2->dim() + i);
  std::vector<Mask> masks;
  for (Mask m = 0; m < (Mask{1} << v->dim()); ++m) masks.push_back(m);
  std::vector<std::size_t> coefs;
  for (std::size_t i = 0; i < d.th.coeffs()->dim(); ++i) coefs.push_back(i);
  const auto w = formcalc::random_form(v, d.th.coeffs(), masks, coefs, d.rng);
  d.record("Cartesian pullback: int F*w = f* int w",
           max_diff(formcalc::fiber_integrate(formcalc::pullback(w, big), cfg.fiber_dim),
                    formcalc::pullback(formcalc::fiber_integrate(w, cfg.fiber_dim), f)),
           cfg.tol);

  const int fb = std::min(cfg.fiber_dim, 1);
  const auto vb = d.times_circles(a, fb, "f");
  const auto b0 = d.line(vb);
  auto b1 = b0;
  b1.set_connection(0, 0, {SampledForm(vb, CoefficientSpace::real()), random_real_one_form(vb, d.rng, 0.3)});
  const auto cyl = d.cylinder(vb);
  const auto tb = formcalc::fiber_integrate(phi_form(linear_homotopy(b0, b1, cyl), d.th), fb);
  const auto t0 = formcalc::fiber_integrate(phi_form(b0, d.th), fb);
  const auto t1 = formcalc::fiber_integrate(phi_form(b1, d.th), fb);
  d.record("bordism: d int T(b) = T(b1) - T(b0)",
           max_diff(formcalc::exterior_d(formcalc::fiber_integrate_interval(tb)), t1 - t0), cfg.tol);
}

}  // namespace

void DemoConfig::validate() const {
  if (n < 4) throw DomainError("mesh size n must be at least 4");
  if (interval_n < 4 || interval_n % 2 != 0) throw DomainError("interval_n must be even and at least 4");
  if (tol <= 0 || exact_tol <= 0 || period_tol <= 0) throw DomainError("tolerances must be positive");
  if (base_dim < 1 || fiber_dim < 1 || cycle_fiber_dim < 0 || compose_first < 1 || compose_second < 1) {
    throw DomainError("layout dimensions out of range");
  }
  if (phi.size() > 3) throw DomainError("at most three phi coefficients");
  const int widest = std::max({base_dim + fiber_dim + cycle_fiber_dim, base_dim + compose_first + compose_second,
                               2 * base_dim + cycle_fiber_dim, std::max(base_dim, 2) + fiber_dim});
  if (widest > 4) throw ResourceError("demo layout needs meshes of dimension " + std::to_string(widest) + " (limit 4)");
}

DemoConfig demo_config(std::string_view name) {
  DemoConfig c;
  if (name == "t2-line") return c;
  if (name == "t4-line") {
    c.demo = "t4-line";
    c.n = 16;
    c.base_dim = 2;
    c.fiber_dim = 2;
    c.cycle_fiber_dim = 0;
    return c;
  }
  throw DomainError("unknown demo '" + std::string(name) + "'");
}

std::vector<std::string> demo_names() { return {"t2-line", "t4-line"}; }

std::vector<std::string> suite_groups() { return {"chern", "transgression", "pushforward", "axioms"}; }

bool SuiteReport::pass() const {
  return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.pass(); });
}

SuiteReport run_suite(const DemoConfig& config, const std::vector<std::string>& groups) {
  config.validate();
  SuiteReport report{config.demo, {}};
  for (const auto& g : groups) {
    const auto all = suite_groups();
    if (std::find(all.begin(), all.end(), g) == all.end()) throw DomainError("unknown suite group '" + g + "'");
    Data d{config, phi1_theory(config.phi), std::mt19937_64(config.seed), 0, report.results, g};
    if (g == "chern") chern_group(d);
    if (g == "transgression") transgression_group(d);
    if (g == "pushforward") pushforward_group(d);
    if (g == "axioms") axioms_group(d);
  }
  return report;
}

}  // namespace cobord::chernweil
