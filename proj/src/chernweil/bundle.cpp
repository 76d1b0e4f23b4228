#include "cobord/chernweil/bundle.hpp"

#include <cmath>
#include <numbers>

#include "cobord/error.hpp"

namespace cobord::chernweil {

using formcalc::CoefficientSpace;
using formcalc::FactorKind;

namespace {

constexpr double two_pi = 2 * std::numbers::pi;

CoeffPtr real() { return CoefficientSpace::real(); }

SampledForm zero_form(const MeshPtr& mesh) { return SampledForm(mesh, real()); }

CoordinateMap cylinder_map(const MeshPtr& cylinder, const MeshPtr& base) {
  CoordinateMap f{cylinder, base, {}};
  for (int j = 0; j < base->dim(); ++j) f.factor_of.push_back(j + 1);
  return f;
}

FormMatrix matmul(const FormMatrix& a, const FormMatrix& b) {
  const std::size_t k = a.size();
  FormMatrix c(k, std::vector<ComplexForm>(k, ComplexForm::zero(a[0][0].re.mesh())));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        if (a[i][l].is_zero() || b[l][j].is_zero()) continue;
        c[i][j] += wedge(a[i][l], b[l][j]);
      }
    }
  }
  return c;
}

}  // namespace

ComplexForm ComplexForm::zero(const MeshPtr& mesh) { return {zero_form(mesh), zero_form(mesh)}; }

ComplexForm& ComplexForm::operator+=(const ComplexForm& b) {
  re += b.re;
  im += b.im;
  return *this;
}

ComplexForm& ComplexForm::operator-=(const ComplexForm& b) {
  re -= b.re;
  im -= b.im;
  return *this;
}

ComplexForm& ComplexForm::operator*=(double s) {
  re *= s;
  im *= s;
  return *this;
}

ComplexForm operator+(ComplexForm a, const ComplexForm& b) { return a += b; }
ComplexForm operator-(ComplexForm a, const ComplexForm& b) { return a -= b; }
ComplexForm operator*(double s, ComplexForm a) { return a *= s; }

ComplexForm wedge(const ComplexForm& a, const ComplexForm& b) {
  return {formcalc::wedge(a.re, b.re) - formcalc::wedge(a.im, b.im),
          formcalc::wedge(a.re, b.im) + formcalc::wedge(a.im, b.re)};
}

ComplexForm exterior_d(const ComplexForm& a) { return {formcalc::exterior_d(a.re), formcalc::exterior_d(a.im)}; }

ComplexForm pullback(const ComplexForm& a, const CoordinateMap& f) {
  return {formcalc::pullback(a.re, f), formcalc::pullback(a.im, f)};
}

GeometricBundle::GeometricBundle(MeshPtr mesh, int rank) : mesh_(std::move(mesh)), rank_(rank) {
  if (rank_ < 1) throw DomainError("bundle rank must be positive");
  a_.assign(static_cast<std::size_t>(rank_), std::vector<ComplexForm>(static_cast<std::size_t>(rank_), ComplexForm::zero(mesh_)));
  tau_.assign(static_cast<std::size_t>(rank_), zero_form(mesh_));
}

GeometricBundle GeometricBundle::line(MeshPtr mesh, const SampledForm& tau, const SampledForm& a) {
  GeometricBundle b(std::move(mesh), 1);
  b.set_twist(0, tau);
  b.set_connection(0, 0, {zero_form(b.mesh_), a});
  return b;
}

const ComplexForm& GeometricBundle::connection(int i, int j) const {
  return a_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
}

const SampledForm& GeometricBundle::twist(int i) const { return tau_.at(static_cast<std::size_t>(i)); }

void GeometricBundle::set_connection(int i, int j, ComplexForm a) {
  for (const auto* f : {&a.re, &a.im}) {
    if (f->is_zero()) continue;
    if (f->coeffs()->dim() != 1) throw DomainError("connection forms must be real-valued");
    if (!formcalc::same_mesh(f->mesh(), mesh_)) throw MismatchError("connection form on another mesh");
    for (const auto& [m, v] : f->components()) {
      if (formcalc::mask_degree(m) != 1) throw DomainError("connection entries must be 1-forms");
    }
  }
  if (a.re.is_zero()) a.re = zero_form(mesh_);
  if (a.im.is_zero()) a.im = zero_form(mesh_);
  a_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)) = std::move(a);
}

void GeometricBundle::set_twist(int i, SampledForm tau) {
  if (!tau.is_zero()) {
    if (tau.coeffs()->dim() != 1) throw DomainError("twist must be a real form");
    if (!formcalc::same_mesh(tau.mesh(), mesh_)) throw MismatchError("twist on another mesh");
    for (const auto& [m, v] : tau.components()) {
      if (formcalc::mask_degree(m) != 2) throw DomainError("twist must be a 2-form");
    }
  }
  tau_.at(static_cast<std::size_t>(i)) = std::move(tau);
}

FormMatrix GeometricBundle::curvature() const {
  FormMatrix f = matmul(a_, a_);
  for (std::size_t i = 0; i < a_.size(); ++i) {
    for (std::size_t j = 0; j < a_.size(); ++j) {
      if (!a_[i][j].is_zero()) f[i][j] += exterior_d(a_[i][j]);
    }
    f[i][i].im += tau_[i];
  }
  return f;
}

GeometricBundle direct_sum(const GeometricBundle& a, const GeometricBundle& b) {
  if (!formcalc::same_mesh(a.mesh(), b.mesh())) throw MismatchError("direct sum of bundles on different meshes");
  GeometricBundle s(a.mesh(), a.rank() + b.rank());
  for (int i = 0; i < a.rank(); ++i) {
    s.set_twist(i, a.twist(i));
    for (int j = 0; j < a.rank(); ++j) s.set_connection(i, j, a.connection(i, j));
  }
  for (int i = 0; i < b.rank(); ++i) {
    s.set_twist(a.rank() + i, b.twist(i));
    for (int j = 0; j < b.rank(); ++j) s.set_connection(a.rank() + i, a.rank() + j, b.connection(i, j));
  }
  return s;
}

GeometricBundle pullback(const GeometricBundle& b, const CoordinateMap& f) {
  if (!formcalc::same_mesh(b.mesh(), f.target)) throw MismatchError("bundle does not live on the map target");
  GeometricBundle out(f.source, b.rank());
  for (int i = 0; i < b.rank(); ++i) {
    out.set_twist(i, formcalc::pullback(b.twist(i), f));
    for (int j = 0; j < b.rank(); ++j) {
      if (!b.connection(i, j).is_zero()) out.set_connection(i, j, pullback(b.connection(i, j), f));
    }
  }
  return out;
}

GeometricBundle linear_homotopy(const GeometricBundle& b0, const GeometricBundle& b1, const MeshPtr& cylinder) {
  if (!formcalc::same_mesh(b0.mesh(), b1.mesh())) throw MismatchError("homotopy ends on different meshes");
  if (b0.rank() != b1.rank()) throw MismatchError("homotopy ends of different rank");
  if (cylinder->dim() != b0.mesh()->dim() + 1 || cylinder->factor(0).kind != FactorKind::interval) {
    throw DomainError("homotopy mesh must be [0,1] times the base mesh");
  }
  const auto f = cylinder_map(cylinder, b0.mesh());
  std::vector<double> t(cylinder->points()), s(cylinder->points());
  for (std::size_t p = 0; p < t.size(); ++p) {
    t[p] = cylinder->coordinate(p, 0);
    s[p] = 1 - t[p];
  }
  auto blend = [&](const SampledForm& x0, const SampledForm& x1) {
    return formcalc::multiply_function(formcalc::pullback(x0, f), s) +
           formcalc::multiply_function(formcalc::pullback(x1, f), t);
  };
  GeometricBundle h(cylinder, b0.rank());
  for (int i = 0; i < b0.rank(); ++i) {
    if (formcalc::max_abs(b0.twist(i) - b1.twist(i)) > 1e-12) throw DomainError("homotopy ends carry different twists");
    h.set_twist(i, formcalc::pullback(b0.twist(i), f));
    for (int j = 0; j < b0.rank(); ++j) {
      const auto& a0 = b0.connection(i, j);
      const auto& a1 = b1.connection(i, j);
      if (a0.is_zero() && a1.is_zero()) continue;
      h.set_connection(i, j, {blend(a0.re, a1.re), blend(a0.im, a1.im)});
    }
  }
  return h;
}

GeometricBundle restrict_interval(const GeometricBundle& b, int sample) {
  GeometricBundle out(formcalc::sub_mesh(*b.mesh(), 1, b.mesh()->dim()), b.rank());
  for (int i = 0; i < b.rank(); ++i) {
    out.set_twist(i, formcalc::restrict_interval(b.twist(i), sample));
    for (int j = 0; j < b.rank(); ++j) {
      const auto& a = b.connection(i, j);
      if (a.is_zero()) continue;
      out.set_connection(i, j, {formcalc::restrict_interval(a.re, sample), formcalc::restrict_interval(a.im, sample)});
    }
  }
  return out;
}

void check_bundle(const GeometricBundle& b, double tol) {
  for (int i = 0; i < b.rank(); ++i) {
    const auto& tau = b.twist(i);
    if (tau.is_zero()) continue;
    if (b.mesh()->has_interval()) {
      if (formcalc::max_abs(formcalc::exterior_d(tau)) > tol) throw DomainError("twist is not closed");
      continue;
    }
    for (const auto& per : formcalc::periods(tau, tol)) {
      const double v = per.value[0] / two_pi;
      if (std::abs(v - std::round(v)) > tol) {
        throw DomainError("twist period " + std::to_string(v) + " is not an integer multiple of 2 pi");
      }
    }
  }
}

SampledForm charge_form(const MeshPtr& mesh, int n, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= mesh->dim() || j >= mesh->dim()) throw DomainError("charge plane needs two distinct factors");
  const double v = two_pi * n * (i < j ? 1 : -1);
  return SampledForm::from_function(mesh, real(), formcalc::mask_of({i, j}), [v](const auto&) { return v; });
}

SampledForm random_real_one_form(const MeshPtr& mesh, std::mt19937_64& rng, double scale) {
  std::vector<Mask> masks;
  for (int i = 0; i < mesh->dim(); ++i) masks.push_back(Mask{1} << i);
  return scale * formcalc::random_form(mesh, real(), masks, {0}, rng);
}

GeometricBundle random_line_bundle(const MeshPtr& mesh, int n, int i, int j, std::mt19937_64& rng, double scale) {
  return GeometricBundle::line(mesh, charge_form(mesh, n, i, j), random_real_one_form(mesh, rng, scale));
}

GeometricBundle random_unitary_bundle(const MeshPtr& mesh, int rank, std::mt19937_64& rng, double scale) {
  GeometricBundle b(mesh, rank);
  for (int i = 0; i < rank; ++i) {
    b.set_connection(i, i, {zero_form(mesh), random_real_one_form(mesh, rng, scale)});
    for (int j = i + 1; j < rank; ++j) {
      ComplexForm a{random_real_one_form(mesh, rng, scale), random_real_one_form(mesh, rng, scale)};
      b.set_connection(i, j, a);
      b.set_connection(j, i, {-a.re, a.im});
    }
  }
  return b;
}

ChernForms chern_forms(const GeometricBundle& b, int i_max, double imaginary_tol) {
  if (i_max < 0 || i_max > b.rank()) throw DomainError("Chern index exceeds the bundle rank");
  const auto& mesh = b.mesh();
  const FormMatrix f = b.curvature();
  // G = F / (2 pi i)
  FormMatrix g = f;
  for (auto& row : g) {
    for (auto& x : row) x = {(1 / two_pi) * x.im, (-1 / two_pi) * x.re};
  }
  ChernForms out;
  out.c.push_back(SampledForm::one(mesh, real()));
  std::vector<SampledForm> s;
  FormMatrix power = g;
  for (int j = 1; j <= i_max; ++j) {
    if (j > 1) power = matmul(power, g);
    ComplexForm tr = ComplexForm::zero(mesh);
    for (std::size_t i = 0; i < power.size(); ++i) tr += power[i][i];
    out.imaginary = std::max(out.imaginary, formcalc::max_abs(tr.im));
    s.push_back(tr.re);
  }
  if (out.imaginary > imaginary_tol) {
    throw DomainError("Chern forms have an imaginary part of " + std::to_string(out.imaginary) + "; bundle data is not unitary");
  }
  for (int i = 1; i <= i_max; ++i) {
    SampledForm ci(mesh, real());
    for (int j = 1; j <= i; ++j) {
      const double sign = j % 2 == 1 ? 1.0 : -1.0;
      ci += sign * formcalc::wedge(out.c[static_cast<std::size_t>(i - j)], s[static_cast<std::size_t>(j - 1)]);
    }
    out.c.push_back((1.0 / i) * ci);
  }
  return out;
}

Theory::Theory(genera::CharacteristicSeries phi, CoeffPtr coeffs, int max_weight)
    : phi_(std::move(phi)), coeffs_(std::move(coeffs)), k_(genera::k_phi(phi_, max_weight)) {
  if (!algebra::same_ring(phi_.ring(), coeffs_->ring())) throw MismatchError("coefficient space is not over the ring of phi");
}

Theory phi1_theory(const std::vector<algebra::Rational>& c, int max_weight) {
  auto ring = algebra::make_ring({{"phi1", -2}}, algebra::Base::rationals, {-2 * max_weight - 8, 0});
  std::vector<algebra::GradedElement> coeffs{algebra::GradedElement::one(ring)};
  for (int i = 1; i <= max_weight; ++i) {
    const algebra::Rational q = i <= static_cast<int>(c.size()) ? c[static_cast<std::size_t>(i - 1)] : algebra::Rational(0);
    coeffs.push_back(algebra::GradedElement::generator(ring, "phi1", i) * algebra::GradedElement::constant(ring, q));
  }
  genera::CharacteristicSeries phi(
      algebra::TruncatedSeries::from_coefficients(ring, genera::z_variable(), max_weight, coeffs), "phi1");
  return Theory(std::move(phi), formcalc::make_coefficients(ring, {-8, 0}), max_weight);
}

SampledForm phi_form(const GeometricBundle& b, const Theory& th) {
  const int w = std::min(b.mesh()->dim() / 2, th.sequence().max_weight);
  if (w < b.mesh()->dim() / 2) throw DomainError("multiplicative sequence weight is below half the mesh dimension");
  const int top = std::min(w, b.rank());
  const auto c = chern_forms(b, top).c;
  const auto& coeffs = th.coeffs();
  SampledForm out(b.mesh(), coeffs);
  const auto& total = th.sequence().total;
  for (const auto& [e, g] : total.coefficients()) {
    if (total.weight(e) > w) continue;
    bool vanishes = false;
    for (std::size_t i = static_cast<std::size_t>(top); i < e.size(); ++i) vanishes = vanishes || e[i] > 0;
    if (vanishes) continue;
    SampledForm mono = SampledForm::one(b.mesh(), CoefficientSpace::real());
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) mono = formcalc::wedge(mono, c[i + 1]);
    }
    out += formcalc::lift(mono, coeffs, coeffs->embed(g));
  }
  return out;
}

SampledForm transgression(const GeometricBundle& h, const Theory& th) {
  const auto& m = *h.mesh();
  if (m.dim() == 0 || m.factor(0).kind != FactorKind::interval) throw DomainError("transgression needs a bundle on [0,1] x V");
  return formcalc::fiber_integrate_interval(phi_form(h, th));
}

}  // namespace cobord::chernweil
