#pragma once

#include <optional>

#include "cobord/chernweil/bundle.hpp"

namespace cobord::chernweil {

// Fibration V = A x F -> A with F the trailing fiber_dim circle factors of V,
// a bundle nu over V and a form sigma on V of total degree -1.
struct SmoothOrientationDatum {
  MeshPtr base;
  int fiber_dim = 0;
  GeometricBundle bundle;
  SampledForm sigma;

  const MeshPtr& total() const { return bundle.mesh(); }
  void validate() const;
};

// A(o) = phi(nu) - d sigma.
SampledForm orientation_a_form(const SmoothOrientationDatum& o, const Theory& th);

// Submersion cycle W = A x F -> A with bundle nu over W, or the empty cycle,
// together with alpha on A of total degree `degree - 1`.
struct SmoothCycleDatum {
  MeshPtr base;
  int degree = 0;
  int fiber_dim = 0;
  std::optional<GeometricBundle> bundle;
  SampledForm alpha;

  bool empty() const { return !bundle.has_value(); }
  void validate(double tol = 1e-9) const;
};

// Cycle with bundle nu on A x F (F the trailing fiber_dim factors); degree -fiber_dim.
SmoothCycleDatum make_cycle(const MeshPtr& base, int fiber_dim, GeometricBundle nu, SampledForm alpha);
// a(omega): the empty cycle with alpha = -omega, of degree deg(omega) + 1.
SmoothCycleDatum action_of_forms(const SampledForm& omega, int degree);

SampledForm cycle_t(const SmoothCycleDatum& x, const Theory& th);
SampledForm cycle_r(const SmoothCycleDatum& x, const Theory& th);

// Cycle over p∘q with bundle nu_q + q* nu_p and
// sigma = A(o_q) ^ q* sigma_p + sigma_q ^ q* phi(nu_p).
SmoothOrientationDatum compose_orientations(const SmoothOrientationDatum& o_p, const SmoothOrientationDatum& o_q,
                                            const Theory& th);

// p_! x for x on the total space of o_p; alpha' = int (phi(nu_p) ^ alpha + sigma ^ R(x)).
SmoothCycleDatum pushforward_cycle(const SmoothOrientationDatum& o_p, const SmoothCycleDatum& x, const Theory& th);

// Cartesian pullback of x along f: A' -> A.
SmoothCycleDatum pullback_cycle(const SmoothCycleDatum& x, const CoordinateMap& f);

// x x y on A x B with total space A x B x F_y x F_x and
// alpha = (-1)^{|x|} R(x) x beta + alpha x T(y).
SmoothCycleDatum product_cycles(const SmoothCycleDatum& x, const SmoothCycleDatum& y, const Theory& th);
// The rewriting (-1)^{|x|} T(x) x beta + alpha x R(y), equal to the product alpha modulo exact forms.
SampledForm product_alpha_symmetric(const SmoothCycleDatum& x, const SmoothCycleDatum& y, const Theory& th);
// x ∪ y for cycles over the same base: total space A x F_y x F_x.
SmoothCycleDatum cup_cycles(const SmoothCycleDatum& x, const SmoothCycleDatum& y, const Theory& th);

}  // namespace cobord::chernweil
