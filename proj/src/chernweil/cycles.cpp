#include "cobord/chernweil/cycles.hpp"

#include "cobord/error.hpp"

namespace cobord::chernweil {

using formcalc::FactorKind;
using formcalc::same_mesh;
using formcalc::sub_mesh;

namespace {

void check_fibration(const MeshPtr& base, const MeshPtr& total, int fiber_dim) {
  if (fiber_dim < 0 || total->dim() != base->dim() + fiber_dim) throw DomainError("total space is not base times fiber");
  if (*sub_mesh(*total, 0, base->dim()) != *base) throw MismatchError("total space does not start with the base mesh");
  for (int i = base->dim(); i < total->dim(); ++i) {
    if (total->factor(i).kind != FactorKind::circle) throw DomainError("fiber with boundary");
  }
}

SampledForm pull(const SampledForm& a, const CoordinateMap& f) { return formcalc::pullback(a, f); }

// Map from E = Z x F_y x F_x onto the total space of a cycle over the image of `base`.
CoordinateMap total_map(const MeshPtr& e, const MeshPtr& total, const CoordinateMap& base, int fiber_offset, int fiber_dim) {
  CoordinateMap f{e, total, base.factor_of};
  for (int i = 0; i < fiber_dim; ++i) f.factor_of.push_back(fiber_offset + i);
  return f;
}

MeshPtr fiber_mesh(const SmoothCycleDatum& x) {
  if (x.empty()) return formcalc::Mesh::make({});
  const auto& m = *x.bundle->mesh();
  return sub_mesh(m, m.dim() - x.fiber_dim, m.dim());
}

SmoothCycleDatum combine(const SmoothCycleDatum& x, const SmoothCycleDatum& y, const MeshPtr& z, const CoordinateMap& fx,
                         const CoordinateMap& fy, const Theory& th) {
  const double sign = x.degree % 2 == 0 ? 1.0 : -1.0;
  SmoothCycleDatum out{z, x.degree + y.degree, 0, std::nullopt,
                       sign * formcalc::wedge(pull(cycle_r(x, th), fx), pull(y.alpha, fy)) +
                           formcalc::wedge(pull(x.alpha, fx), pull(cycle_t(y, th), fy))};
  if (x.empty() || y.empty()) return out;
  const auto e = formcalc::product_mesh(*formcalc::product_mesh(*z, *fiber_mesh(y)), *fiber_mesh(x));
  const int zd = z->dim();
  const auto gx = total_map(e, x.bundle->mesh(), fx, zd + y.fiber_dim, x.fiber_dim);
  const auto gy = total_map(e, y.bundle->mesh(), fy, zd, y.fiber_dim);
  gx.validate();
  gy.validate();
  out.fiber_dim = x.fiber_dim + y.fiber_dim;
  out.bundle = direct_sum(pullback(*x.bundle, gx), pullback(*y.bundle, gy));
  return out;
}

CoordinateMap identity_map(const MeshPtr& m) {
  CoordinateMap f{m, m, {}};
  for (int i = 0; i < m->dim(); ++i) f.factor_of.push_back(i);
  return f;
}

}  // namespace

void SmoothOrientationDatum::validate() const {
  check_fibration(base, bundle.mesh(), fiber_dim);
  if (!same_mesh(sigma.mesh(), bundle.mesh())) throw MismatchError("sigma must live on the total space");
  if (auto d = sigma.total_degree(); d && *d != -1) throw DomainError("sigma must have total degree -1");
}

SampledForm orientation_a_form(const SmoothOrientationDatum& o, const Theory& th) {
  o.validate();
  return phi_form(o.bundle, th) - formcalc::exterior_d(o.sigma);
}

void SmoothCycleDatum::validate(double tol) const {
  if (!same_mesh(alpha.mesh(), base)) throw MismatchError("alpha must live on the base");
  if (auto d = alpha.total_degree(tol); d && *d != degree - 1) {
    throw DomainError("alpha has total degree " + std::to_string(*d) + ", expected " + std::to_string(degree - 1));
  }
  if (!alpha.is_zero() && !alpha.total_degree(tol) && formcalc::max_abs(alpha) > tol) {
    throw DomainError("alpha is not homogeneous in total degree");
  }
  if (bundle) {
    check_fibration(base, bundle->mesh(), fiber_dim);
    if (degree != -fiber_dim) throw DomainError("cycle degree must be minus the fiber dimension");
  }
}

SmoothCycleDatum make_cycle(const MeshPtr& base, int fiber_dim, GeometricBundle nu, SampledForm alpha) {
  SmoothCycleDatum x{base, -fiber_dim, fiber_dim, std::move(nu), std::move(alpha)};
  x.validate();
  return x;
}

SmoothCycleDatum action_of_forms(const SampledForm& omega, int degree) {
  SmoothCycleDatum x{omega.mesh(), degree, 0, std::nullopt, -omega};
  x.validate();
  return x;
}

SampledForm cycle_t(const SmoothCycleDatum& x, const Theory& th) {
  if (x.empty()) return SampledForm(x.base, th.coeffs());
  return formcalc::fiber_integrate(phi_form(*x.bundle, th), x.fiber_dim);
}

SampledForm cycle_r(const SmoothCycleDatum& x, const Theory& th) {
  return cycle_t(x, th) - formcalc::exterior_d(x.alpha);
}

SmoothOrientationDatum compose_orientations(const SmoothOrientationDatum& o_p, const SmoothOrientationDatum& o_q,
                                            const Theory& th) {
  o_p.validate();
  o_q.validate();
  if (!same_mesh(o_q.base, o_p.total())) throw DomainError("fibrations are not nested");
  const auto q = formcalc::projection(o_q.total(), 0, o_p.total()->dim());
  SampledForm sigma = formcalc::wedge(orientation_a_form(o_q, th), pull(o_p.sigma, q)) +
                      formcalc::wedge(o_q.sigma, pull(phi_form(o_p.bundle, th), q));
  return {o_p.base, o_p.fiber_dim + o_q.fiber_dim, direct_sum(o_q.bundle, pullback(o_p.bundle, q)), std::move(sigma)};
}

SmoothCycleDatum pushforward_cycle(const SmoothOrientationDatum& o_p, const SmoothCycleDatum& x, const Theory& th) {
  o_p.validate();
  x.validate();
  if (!same_mesh(x.base, o_p.total())) throw MismatchError("cycle does not live on the total space of the orientation");
  SmoothCycleDatum out{o_p.base, x.degree - o_p.fiber_dim, 0, std::nullopt,
                       formcalc::fiber_integrate(formcalc::wedge(phi_form(o_p.bundle, th), x.alpha) +
                                                     formcalc::wedge(o_p.sigma, cycle_r(x, th)),
                                                 o_p.fiber_dim)};
  if (x.empty()) return out;
  const auto q = formcalc::projection(x.bundle->mesh(), 0, o_p.total()->dim());
  out.fiber_dim = o_p.fiber_dim + x.fiber_dim;
  out.bundle = direct_sum(*x.bundle, pullback(o_p.bundle, q));
  return out;
}

SmoothCycleDatum pullback_cycle(const SmoothCycleDatum& x, const CoordinateMap& f) {
  f.validate();
  if (!same_mesh(f.target, x.base)) throw MismatchError("cycle does not live on the map target");
  SmoothCycleDatum out{f.source, x.degree, x.fiber_dim, std::nullopt, pull(x.alpha, f)};
  if (x.empty()) return out;
  const auto e = formcalc::product_mesh(*f.source, *fiber_mesh(x));
  const auto g = total_map(e, x.bundle->mesh(), f, f.source->dim(), x.fiber_dim);
  out.bundle = pullback(*x.bundle, g);
  return out;
}

SmoothCycleDatum product_cycles(const SmoothCycleDatum& x, const SmoothCycleDatum& y, const Theory& th) {
  const auto z = formcalc::product_mesh(*x.base, *y.base);
  return combine(x, y, z, formcalc::projection(z, 0, x.base->dim()), formcalc::projection(z, x.base->dim(), y.base->dim()), th);
}

SampledForm product_alpha_symmetric(const SmoothCycleDatum& x, const SmoothCycleDatum& y, const Theory& th) {
  const auto z = formcalc::product_mesh(*x.base, *y.base);
  const auto fx = formcalc::projection(z, 0, x.base->dim());
  const auto fy = formcalc::projection(z, x.base->dim(), y.base->dim());
  const double sign = x.degree % 2 == 0 ? 1.0 : -1.0;
  return sign * formcalc::wedge(pull(cycle_t(x, th), fx), pull(y.alpha, fy)) +
         formcalc::wedge(pull(x.alpha, fx), pull(cycle_r(y, th), fy));
}

SmoothCycleDatum cup_cycles(const SmoothCycleDatum& x, const SmoothCycleDatum& y, const Theory& th) {
  if (!same_mesh(x.base, y.base)) throw MismatchError("cup product needs cycles over the same base");
  const auto id = identity_map(x.base);
  return combine(x, y, x.base, id, id, th);
}

}  // namespace cobord::chernweil
