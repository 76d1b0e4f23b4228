#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "cobord/error.hpp"
#include "cobord/formcalc/form.hpp"

using namespace cobord;
using namespace cobord::formcalc;

namespace {

constexpr double pi = std::numbers::pi;

CoeffPtr real() { return CoefficientSpace::real(); }

CoeffPtr phi_coeffs() {
  return make_coefficients(algebra::make_ring({{"phi1", -2}}), {-8, 0});
}

SampledForm coordinate_form(MeshPtr m, CoeffPtr c, Mask mask, double scale = 1.0) {
  return SampledForm::from_function(std::move(m), std::move(c), mask, [scale](const auto&) { return scale; });
}

std::vector<Mask> all_masks(int dim) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << dim); ++m) out.push_back(m);
  return out;
}

std::vector<std::size_t> all_coefficients(const CoeffPtr& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c->dim(); ++i) out.push_back(i);
  return out;
}

SampledForm random_homogeneous(MeshPtr m, CoeffPtr c, int k, std::mt19937_64& rng) {
  std::vector<Mask> masks;
  for (Mask x : all_masks(m->dim())) {
    if (mask_degree(x) == k) masks.push_back(x);
  }
  return random_form(std::move(m), c, masks, all_coefficients(c), rng);
}

}  // namespace

TEST_CASE("mesh layout and limits") {
  auto m = Mesh::make({{FactorKind::interval, 8, "t"}, {FactorKind::circle, 4, "x"}, {FactorKind::circle, 6, "y"}});
  CHECK(m->points() == 9u * 4u * 6u);
  CHECK(m->stride(2) == 1u);
  CHECK(m->stride(0) == 24u);
  CHECK(m->flat_index(m->multi_index(100)) == 100u);
  CHECK(m->coordinate(m->flat_index({8, 1, 3}), 0) == doctest::Approx(1.0));
  CHECK(m->coordinate(m->flat_index({8, 1, 3}), 2) == doctest::Approx(0.5));
  CHECK_THROWS_AS(Mesh::torus(7, 4), ResourceError);
  CHECK_THROWS_AS(Mesh::torus(2, 3), DomainError);
  CHECK_THROWS_AS(Mesh::make({{FactorKind::interval, 8, "s"}, {FactorKind::interval, 8, "t"}}), DomainError);
  CHECK_THROWS_AS(Mesh::make({{FactorKind::interval, 7, "t"}}), DomainError);
  CHECK(*sub_mesh(*m, 1, 3) == Mesh({{FactorKind::circle, 4, "x"}, {FactorKind::circle, 6, "y"}}));
  CHECK(mesh_from_json(mesh_to_json(*m))->points() == m->points());
  CHECK_THROWS_AS(mesh_from_json(nlohmann::json::parse(R"({"factors":[{"kind":"disk","n":4}]})")), ParseError);
}

TEST_CASE("coefficient space from a truncated ring") {
  auto c = phi_coeffs();
  REQUIRE(c->dim() == 5);
  CHECK(c->degree(c->unit()) == 0);
  const auto i1 = *c->index_of({1}), i3 = *c->index_of({3}), i4 = *c->index_of({4});
  CHECK(c->product(i1, i3) == static_cast<int>(i4));
  CHECK(c->product(i3, i3) == -1);
  CHECK(c->basis_name(i3) == "phi1^3");
  CHECK_THROWS_AS(make_coefficients(algebra::make_ring({{"u", -3}}), {-6, 0}), DomainError);
  CHECK(real()->dim() == 1);
}

TEST_CASE("wedge examples") {
  auto t2 = Mesh::torus(2, 16);
  auto dx = coordinate_form(t2, real(), 0b01);
  auto dy = coordinate_form(t2, real(), 0b10);
  auto top = wedge(dx, dy);
  REQUIRE(top.component(0b11));
  CHECK(top.value(0b11, 0, 37) == 1.0);
  CHECK(wedge(dy, dx).value(0b11, 0, 37) == -1.0);
  CHECK(max_abs(wedge(dx, dx)) == 0.0);

  auto f = SampledForm::from_function(t2, real(), 0b01, [](const auto& x) { return std::sin(2 * pi * x[0]); });
  auto g = SampledForm::from_function(t2, real(), 0b10, [](const auto& x) { return std::cos(2 * pi * x[1]); });
  auto fg = wedge(f, g);
  double err = 0;
  for (std::size_t p = 0; p < t2->points(); ++p) {
    const double want = std::sin(2 * pi * t2->coordinate(p, 0)) * std::cos(2 * pi * t2->coordinate(p, 1));
    err = std::max(err, std::abs(fg.value(0b11, 0, p) - want));
  }
  CHECK(err < 1e-15);

  auto c = phi_coeffs();
  auto a = SampledForm::constant(t2, c, {0, 0, 0, 2, 0});
  auto b = SampledForm::constant(t2, c, {0, 0, 0, 3, 0});
  CHECK(max_abs(wedge(a, b)) == 0.0);
  auto one = SampledForm::one(t2, c);
  CHECK(max_abs(wedge(one, a) - a) == 0.0);
  CHECK_THROWS_AS(wedge(dx, one), MismatchError);
  CHECK_THROWS_AS(dx + coordinate_form(Mesh::torus(2, 8), real(), 1), MismatchError);
}

TEST_CASE("exterior derivative examples") {
  auto s1 = Mesh::torus(1, 32);
  CHECK(max_abs(exterior_d(SampledForm::constant(s1, real(), {3.0}))) < 1e-12);
  auto f = SampledForm::from_function(s1, real(), 0, [](const auto& x) { return std::sin(2 * pi * x[0]); });
  auto df = exterior_d(f);
  double err = 0;
  for (std::size_t p = 0; p < s1->points(); ++p) {
    err = std::max(err, std::abs(df.value(1, 0, p) - 2 * pi * std::cos(2 * pi * s1->coordinate(p, 0))));
  }
  CHECK(err <= 1e-10);
  auto s5 = Mesh::torus(1, 5);
  auto h = SampledForm::from_function(s5, real(), 0, [](const auto& x) { return std::cos(4 * pi * x[0]); });
  auto dh = exterior_d(h);
  for (std::size_t p = 0; p < 5; ++p) {
    CHECK(dh.value(1, 0, p) == doctest::Approx(-4 * pi * std::sin(4 * pi * s5->coordinate(p, 0))).epsilon(1e-12));
  }
  auto t2 = Mesh::torus(2, 16);
  CHECK(max_abs(exterior_d(coordinate_form(t2, real(), 0b11))) < 1e-12);

  auto iv = Mesh::make({{FactorKind::interval, 8, "t"}});
  auto quartic = SampledForm::from_function(iv, real(), 0, [](const auto& x) { return std::pow(x[0], 4) - x[0]; });
  auto dq = exterior_d(quartic);
  for (std::size_t p = 0; p < iv->points(); ++p) {
    const double t = iv->coordinate(p, 0);
    CHECK(dq.value(1, 0, p) == doctest::Approx(4 * t * t * t - 1).epsilon(1e-11));
  }
}

TEST_CASE("fiber integration examples") {
  auto t2 = Mesh::torus(2, 16);
  auto top = coordinate_form(t2, real(), 0b11);
  auto pt = fiber_integrate(top, 2);
  CHECK(pt.mesh()->dim() == 0);
  CHECK(pt.value(0, 0, 0) == doctest::Approx(1.0));

  auto t4 = Mesh::torus(4, 8);
  const double n = 3;
  auto fib = coordinate_form(t4, real(), 0b1100, n);
  auto base = fiber_integrate(fib, 2);
  REQUIRE(base.component(0));
  for (double v : *base.component(0)) CHECK(v == doctest::Approx(n));
  CHECK(fiber_integrate(coordinate_form(t4, real(), 0b0111), 2).is_zero());

  auto cyl = Mesh::make({{FactorKind::interval, 8, "t"}, {FactorKind::circle, 8, "x"}});
  CHECK_THROWS_AS(fiber_integrate(coordinate_form(cyl, real(), 0b11), 2), DomainError);
}

TEST_CASE("interval integration examples") {
  auto cyl = Mesh::make({{FactorKind::interval, 32, "t"}, {FactorKind::circle, 8, "x"}, {FactorKind::circle, 8, "y"}});
  auto t2 = sub_mesh(*cyl, 1, 3);
  auto omega = SampledForm::from_function(t2, real(), 0b11, [](const auto& x) { return 1 + std::sin(2 * pi * x[0]); });
  CHECK(fiber_integrate_interval(cylinder_pullback(omega, cyl)).is_zero());

  auto dt = coordinate_form(cyl, real(), 0b001);
  auto beta = cylinder_pullback(omega, cyl);
  CHECK(max_abs(fiber_integrate_interval(wedge(dt, beta)) - omega) < 1e-14);

  auto t = SampledForm::from_function(cyl, real(), 0, [](const auto& x) { return x[0]; });
  CHECK(max_abs(fiber_integrate_interval(wedge(dt, wedge(t, beta))) - 0.5 * omega) < 1e-14);
  CHECK(max_abs(restrict_interval(wedge(t, beta), 32) - omega) < 1e-14);
  CHECK(restrict_interval(wedge(t, beta), 0).degree_part(2).component(0b11) != nullptr);
}

TEST_CASE("periods examples") {
  auto t2 = Mesh::torus(2, 16);
  auto dx = coordinate_form(t2, real(), 0b01);
  auto ps = periods(dx, 1e-8);
  REQUIRE(ps.size() == 4);
  CHECK(ps[1].cycle == 0b01);
  CHECK(ps[1].value[0] == doctest::Approx(1.0));
  CHECK(ps[2].value[0] == 0.0);

  const double n = 5;
  auto top = coordinate_form(t2, real(), 0b11, n);
  CHECK(periods(top, 1e-8)[3].value[0] == doctest::Approx(n));

  std::mt19937_64 rng(7);
  auto f = random_form(Mesh::torus(3, 16), phi_coeffs(), {0b000, 0b011, 0b101}, {0, 2, 4}, rng);
  for (const auto& p : periods(exterior_d(f), 1e-8)) {
    for (double v : p.value) CHECK(std::abs(v) <= 1e-8);
  }

  auto bump = SampledForm::from_function(t2, real(), 0b01, [](const auto& x) { return std::sin(2 * pi * x[1]); });
  CHECK_THROWS_AS(periods(bump, 1e-8), DomainError);
  auto cyl = Mesh::make({{FactorKind::interval, 8, "t"}});
  CHECK_THROWS_AS(periods(SampledForm::one(cyl, real()), 1e-8), DomainError);

  auto g = random_form(t2, real(), {0b01, 0b10}, {0}, rng);
  auto same = compare_mod_exact(top + exterior_d(g), top);
  CHECK(same.closed_residual <= 1e-10);
  CHECK(same.period_residual <= 1e-10);
  CHECK(compare_mod_exact(2.0 * top, top).period_residual == doctest::Approx(n));
}

TEST_CASE("d squares to zero and obeys Leibniz") {
  std::mt19937_64 rng(20261018);
  auto c = phi_coeffs();
  auto mesh = Mesh::make({{FactorKind::interval, 32, "t"}, {FactorKind::circle, 32, "x"}, {FactorKind::circle, 32, "y"}});
  auto w = random_form(mesh, c, all_masks(3), all_coefficients(c), rng);
  CHECK(max_abs(exterior_d(exterior_d(w))) <= 1e-8);

  auto t3 = Mesh::torus(3, 32);
  for (int k = 0; k <= 2; ++k) {
    for (const auto& m : {t3, mesh}) {
      auto a = random_homogeneous(m, c, k, rng);
      auto b = random_homogeneous(m, c, 1, rng);
      const double sign = k % 2 == 0 ? 1.0 : -1.0;
      auto lhs = exterior_d(wedge(a, b));
      auto rhs = wedge(exterior_d(a), b) + sign * wedge(a, exterior_d(b));
      CHECK(max_abs(lhs - rhs) <= 1e-8);
    }
  }
}

TEST_CASE("fiber integration commutes with d and composes") {
  std::mt19937_64 rng(11);
  auto c = phi_coeffs();
  auto t4 = Mesh::torus(4, 16);
  auto w = random_form(t4, c, all_masks(4), all_coefficients(c), rng, 2);
  CHECK(max_abs(fiber_integrate(exterior_d(w), 2) - exterior_d(fiber_integrate(w, 2))) <= 1e-8);
  CHECK(max_abs(fiber_integrate(exterior_d(w), 1) - exterior_d(fiber_integrate(w, 1))) <= 1e-8);
  CHECK(max_abs(fiber_integrate(fiber_integrate(w, 1), 2) - fiber_integrate(w, 3)) <= 1e-8);
  CHECK(max_abs(fiber_integrate(fiber_integrate(w, 2), 2) - fiber_integrate(w, 4)) <= 1e-8);
}

TEST_CASE("homotopy formula for the interval integral") {
  std::mt19937_64 rng(5);
  auto c = phi_coeffs();
  auto mesh = Mesh::make({{FactorKind::interval, 32, "t"}, {FactorKind::circle, 32, "x"}, {FactorKind::circle, 32, "y"}});
  auto w = random_form(mesh, c, all_masks(3), all_coefficients(c), rng);
  auto lhs = exterior_d(fiber_integrate_interval(w)) + fiber_integrate_interval(exterior_d(w));
  auto rhs = restrict_interval(w, 32) - restrict_interval(w, 0);
  CHECK(max_abs(lhs - rhs) <= 1e-6);
}

TEST_CASE("pullback along coordinate maps") {
  auto t2 = Mesh::torus(2, 8);
  auto t1 = Mesh::torus(1, 8);
  auto f = SampledForm::from_function(t1, real(), 1, [](const auto& x) { return std::sin(2 * pi * x[0]); });
  auto p2 = pullback(f, {t2, t1, {1}});
  CHECK(p2.value(0b10, 0, t2->flat_index({3, 2})) == doctest::Approx(std::sin(2 * pi * 0.25)));

  auto dxdy = coordinate_form(t2, real(), 0b11);
  auto swapped = pullback(dxdy, {t2, t2, {1, 0}});
  CHECK(swapped.value(0b11, 0, 5) == -1.0);
  auto t3 = Mesh::torus(3, 8);
  CHECK(pullback(dxdy, {t3, t2, {2, 2}}).is_zero());

  std::mt19937_64 rng(3);
  auto w = random_form(t2, phi_coeffs(), all_masks(2), {0, 1}, rng);
  auto map = CoordinateMap{t3, t2, {2, 0}};
  CHECK(max_abs(exterior_d(pullback(w, map)) - pullback(exterior_d(w), map)) <= 1e-10);
  CHECK_THROWS_AS(pullback(w, {t3, Mesh::torus(2, 4), {0, 1}}), MismatchError);
}

TEST_CASE("graded bookkeeping") {
  auto t2 = Mesh::torus(2, 8);
  auto c = phi_coeffs();
  auto x = lift(coordinate_form(t2, real(), 0b01), c, {0, 1, 0, 0, 0});
  CHECK(x.total_degree() == std::optional<int>(-1));
  CHECK_FALSE((x + SampledForm::one(t2, c)).total_degree().has_value());
  auto j = form_to_json(x);
  CHECK(j["components"][0]["factors"] == nlohmann::json::array({0}));
  CHECK(j["coefficients"][1] == "phi1");
}
