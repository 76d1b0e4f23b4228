#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "json.hpp"

#include "cobord/formcalc/coefficients.hpp"
#include "cobord/formcalc/mesh.hpp"

namespace cobord::formcalc {

// Bit i of a mask stands for dx_i of mesh factor i; a component with mask m is
// f dx_{i1} ^ ... ^ dx_{ik} with i1 < ... < ik.
using Mask = std::uint32_t;

int mask_degree(Mask m);
std::vector<int> mask_factors(Mask m);
Mask mask_of(const std::vector<int>& factors);

// Differential form sampled on a mesh with values in a coefficient space. Only
// nonzero components are stored; each is an array laid out [coefficient][point].
// Mixed form degrees are allowed.
class SampledForm {
 public:
  using Components = std::map<Mask, std::vector<double>>;

  SampledForm(MeshPtr mesh, CoeffPtr coeffs);

  static SampledForm constant(MeshPtr mesh, CoeffPtr coeffs, const std::vector<double>& value);
  static SampledForm one(MeshPtr mesh, CoeffPtr coeffs);
  // f(x) dx_mask with coefficient basis element `coefficient`.
  static SampledForm from_function(MeshPtr mesh, CoeffPtr coeffs, Mask mask,
                                   const std::function<double(const std::vector<double>&)>& f,
                                   std::size_t coefficient = 0);

  const MeshPtr& mesh() const { return mesh_; }
  const CoeffPtr& coeffs() const { return coeffs_; }
  const Components& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  const std::vector<double>* component(Mask m) const;
  std::vector<double>& component_mut(Mask m);
  double value(Mask m, std::size_t coefficient, std::size_t point) const;

  SampledForm degree_part(int k) const;
  std::optional<int> total_degree(double tol = 0) const;

  SampledForm operator-() const;
  SampledForm& operator+=(const SampledForm& b);
  SampledForm& operator-=(const SampledForm& b);
  SampledForm& operator*=(double s);

  void check_compatible(const SampledForm& b) const;

 private:
  MeshPtr mesh_;
  CoeffPtr coeffs_;
  Components comps_;
};

SampledForm operator+(SampledForm a, const SampledForm& b);
SampledForm operator-(SampledForm a, const SampledForm& b);
SampledForm operator*(double s, SampledForm a);

double max_abs(const SampledForm& a);

SampledForm wedge(const SampledForm& a, const SampledForm& b);
SampledForm exterior_d(const SampledForm& a);

// Real form times a fixed coefficient vector, landing in `coeffs`.
SampledForm lift(const SampledForm& real_form, const CoeffPtr& coeffs, const std::vector<double>& coefficient);
// Pointwise product with a real function (0-form on the same mesh).
SampledForm multiply_function(const SampledForm& a, const std::vector<double>& f);

// Integration over the trailing `fiber_factors` factors, which must be circles.
// With the fiber directions last, p_! d = d p_!.
SampledForm fiber_integrate(const SampledForm& a, int fiber_factors);
// Integration over the interval factor 0 (Simpson): d I + I d = r1* - r0*.
SampledForm fiber_integrate_interval(const SampledForm& a);
// Restriction to {t_i} x V along the interval factor 0.
SampledForm restrict_interval(const SampledForm& a, int sample);

// Map source -> target sending each target factor j to source factor
// factor_of[j] on the same grid (projections, diagonals, permutations).
struct CoordinateMap {
  MeshPtr source;
  MeshPtr target;
  std::vector<int> factor_of;

  void validate() const;
};

CoordinateMap projection(MeshPtr source, int first, int count);
SampledForm pullback(const SampledForm& a, const CoordinateMap& f);
// Pullback along the projection [0,1] x V -> V.
SampledForm cylinder_pullback(const SampledForm& a, const MeshPtr& cylinder);

struct Period {
  Mask cycle = 0;                 // coordinate subtorus through the origin
  std::vector<double> value;      // per coefficient basis element
};

// Integrals over every coordinate subtorus of a closed form on a torus mesh.
std::vector<Period> periods(const SampledForm& a, double closed_tol);

struct ExactComparison {
  double closed_residual = 0;  // sup norm of d(a - b)
  double period_residual = 0;  // largest period of a - b
};
ExactComparison compare_mod_exact(const SampledForm& a, const SampledForm& b);

// Sum of random Fourier modes |k_i| <= max_mode on circles and polynomials of
// degree <= 2 on the interval, for each requested mask and coefficient.
SampledForm random_form(MeshPtr mesh, CoeffPtr coeffs, const std::vector<Mask>& masks,
                        const std::vector<std::size_t>& coefficients, std::mt19937_64& rng, int max_mode = 1);

nlohmann::json form_to_json(const SampledForm& a);
nlohmann::json mesh_to_json(const Mesh& m);
MeshPtr mesh_from_json(const nlohmann::json& j);

}  // namespace cobord::formcalc
