#pragma once

#include <random>
#include <vector>

#include "cobord/formcalc/form.hpp"
#include "cobord/genera/genera.hpp"

namespace cobord::chernweil {

using formcalc::CoeffPtr;
using formcalc::CoordinateMap;
using formcalc::Mask;
using formcalc::MeshPtr;
using formcalc::SampledForm;

// Complex-valued form with real coefficients.
struct ComplexForm {
  SampledForm re;
  SampledForm im;

  static ComplexForm zero(const MeshPtr& mesh);
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  ComplexForm& operator+=(const ComplexForm& b);
  ComplexForm& operator-=(const ComplexForm& b);
  ComplexForm& operator*=(double s);
};

ComplexForm operator+(ComplexForm a, const ComplexForm& b);
ComplexForm operator-(ComplexForm a, const ComplexForm& b);
ComplexForm operator*(double s, ComplexForm a);
ComplexForm wedge(const ComplexForm& a, const ComplexForm& b);
ComplexForm exterior_d(const ComplexForm& a);
ComplexForm pullback(const ComplexForm& a, const CoordinateMap& f);

using FormMatrix = std::vector<std::vector<ComplexForm>>;

// Rank-k bundle given by a global connection matrix A of complex 1-forms and a
// closed real 2-form tau_j per diagonal line; curvature F = dA + A^A + i diag(tau).
class GeometricBundle {
 public:
  GeometricBundle(MeshPtr mesh, int rank);

  static GeometricBundle trivial(MeshPtr mesh, int rank) { return GeometricBundle(std::move(mesh), rank); }
  // Line bundle with connection i*a and twist tau.
  static GeometricBundle line(MeshPtr mesh, const SampledForm& tau, const SampledForm& a);

  const MeshPtr& mesh() const { return mesh_; }
  int rank() const { return rank_; }
  const ComplexForm& connection(int i, int j) const;
  const SampledForm& twist(int i) const;
  void set_connection(int i, int j, ComplexForm a);
  void set_twist(int i, SampledForm tau);

  FormMatrix curvature() const;

 private:
  MeshPtr mesh_;
  int rank_;
  FormMatrix a_;
  std::vector<SampledForm> tau_;
};

GeometricBundle direct_sum(const GeometricBundle& a, const GeometricBundle& b);
GeometricBundle pullback(const GeometricBundle& b, const CoordinateMap& f);
// Bundle on [0,1] x V with connection (1-t) A0 + t A1; the twists must agree.
GeometricBundle linear_homotopy(const GeometricBundle& b0, const GeometricBundle& b1, const MeshPtr& cylinder);
// Restriction to {t_sample} x V.
GeometricBundle restrict_interval(const GeometricBundle& b, int sample);

// Twists closed and, on torus meshes, with integral periods of tau / 2pi.
void check_bundle(const GeometricBundle& b, double tol);

// 2 pi n dx_i ^ dx_j on the given mesh.
SampledForm charge_form(const MeshPtr& mesh, int n, int i, int j);
// Real 1-form with random Fourier modes of size `scale`.
SampledForm random_real_one_form(const MeshPtr& mesh, std::mt19937_64& rng, double scale);
// Line bundle with twist charge_form(n, i, j) and a random connection.
GeometricBundle random_line_bundle(const MeshPtr& mesh, int n, int i, int j, std::mt19937_64& rng, double scale = 0.3);
// Rank-k bundle with a random anti-Hermitian connection and no twist.
GeometricBundle random_unitary_bundle(const MeshPtr& mesh, int rank, std::mt19937_64& rng, double scale = 0.3);

struct ChernForms {
  std::vector<SampledForm> c;  // c[0] = 1, ..., c[i_max], real 2i-forms
  double imaginary = 0;        // largest imaginary part met in the traces
};

// Chern forms of det(1 + F/(2 pi i)) via Newton identities on traces.
ChernForms chern_forms(const GeometricBundle& b, int i_max, double imaginary_tol = 1e-8);

// phi together with the coefficient space its forms take values in.
class Theory {
 public:
  Theory(genera::CharacteristicSeries phi, CoeffPtr coeffs, int max_weight = 3);

  const genera::CharacteristicSeries& phi() const { return phi_; }
  const CoeffPtr& coeffs() const { return coeffs_; }
  const genera::MultiplicativeSequence& sequence() const { return k_; }

 private:
  genera::CharacteristicSeries phi_;
  CoeffPtr coeffs_;
  genera::MultiplicativeSequence k_;
};

// phi(z) = 1 + sum c_i phi1^i z^i over Q[phi1] with the window [-2 w, 0].
Theory phi1_theory(const std::vector<algebra::Rational>& c, int max_weight = 3);

// K_phi evaluated on the Chern forms of b.
SampledForm phi_form(const GeometricBundle& b, const Theory& th);
// Fiber integral over [0,1] of phi of a bundle on a cylinder.
SampledForm transgression(const GeometricBundle& h, const Theory& th);

}  // namespace cobord::chernweil
