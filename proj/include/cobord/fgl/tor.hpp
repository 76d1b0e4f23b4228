#pragma once

#include <vector>

#include "cobord/algebra/graded_element.hpp"
#include "cobord/algebra/graded_ring.hpp"
#include "cobord/algebra/ring_map.hpp"

namespace cobord::fgl {

using algebra::DegreeWindow;

// Cokernel of F1 -> F0 over a connected graded Q-algebra. Relation j has
// degree relation_degrees[j]; its entry for generator i is homogeneous of
// degree relation_degrees[j] - generator_degrees[i].
struct ModulePresentation {
  algebra::RingPtr ring;
  std::vector<int> generator_degrees;
  std::vector<int> relation_degrees;
  std::vector<std::vector<algebra::GradedElement>> relations;  // relations[j][i]

  void validate() const;
};

struct TorDegree {
  int degree = 0;
  std::size_t dim = 0;
  bool partial = false;
};

struct TorTable {
  std::vector<TorDegree> degrees;  // from window.hi down to window.lo
  std::vector<int> syzygy_degrees;  // degrees of the minimal syzygy generators found
};

// Per-degree dim Tor_1(M, R) within the window. `max_basis` bounds the size of
// any single graded piece.
TorTable tor1(const ModulePresentation& m, const algebra::RingMap& map, DegreeWindow window,
              std::size_t max_basis = 20000);

// Monomials of a connected polynomial ring in one degree.
std::vector<algebra::Exponent> monomial_basis(const algebra::GradedRingSpec& ring, int degree);

}  // namespace cobord::fgl
