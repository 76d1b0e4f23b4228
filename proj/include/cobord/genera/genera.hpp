#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cobord/algebra/graded_element.hpp"
#include "cobord/algebra/series.hpp"

namespace cobord::genera {

using algebra::GradedElement;
using algebra::Rational;
using algebra::RingPtr;
using algebra::TruncatedSeries;

// phi(z) = 1 + phi_1 z + phi_2 z^2 + ..., z of degree 2. When the coefficient
// ring has generators, phi_i must be homogeneous of degree -2i.
class CharacteristicSeries {
 public:
  explicit CharacteristicSeries(TruncatedSeries phi, std::string label = {});

  const TruncatedSeries& series() const { return phi_; }
  const RingPtr& ring() const { return phi_.ring(); }
  int order() const { return phi_.order(); }
  const std::string& label() const { return label_; }
  GradedElement coefficient(int i) const { return phi_.coefficient(i); }

 private:
  TruncatedSeries phi_;
  std::string label_;
};

// 1/phi, the series of the same genus in the tangential convention.
TruncatedSeries tangential(const CharacteristicSeries& phi);

// The series variable z of degree 2.
algebra::SeriesVariable z_variable();

// K_1 + ... + K_N as one truncated series in c_1..c_N (c_i of degree 2i),
// constant term 1. K_n is its weight-n part.
struct MultiplicativeSequence {
  RingPtr ring;
  int max_weight = 0;
  TruncatedSeries total;

  TruncatedSeries component(int n) const;
  static std::vector<algebra::SeriesVariable> chern_variables(int n);
};

MultiplicativeSequence k_phi(const CharacteristicSeries& phi, int max_weight);

// Sum of K_n(c) for n <= max_weight. Chern values live in the ring of K.
GradedElement eval_sequence(const MultiplicativeSequence& k, const std::vector<GradedElement>& chern);
// Same with series values (for instance c_i in R[a]/(a^{n+1})); each value needs
// zero constant term. The result has the order of the values.
TruncatedSeries eval_sequence(const MultiplicativeSequence& k, const std::vector<TruncatedSeries>& chern);

GradedElement genus_cpn(const CharacteristicSeries& phi, int n);
GradedElement genus_cpn_via_chern(const CharacteristicSeries& phi, int n);

// todd, l_genus, a_hat, elliptic (formal delta, eps) or elliptic(d,e) with
// rational parameters.
CharacteristicSeries builtin_genus(std::string_view name, int order);
std::vector<std::string> builtin_genus_names();

struct GenusTable {
  CharacteristicSeries phi;
  std::map<int, GradedElement> values;  // n -> genus of CP^n
};

GenusTable genus_table(const CharacteristicSeries& phi, int max_n);

// Q[CP1, ..., CPn] with deg CPk = -2k.
RingPtr cobordism_ring(int n);
// Index k of a generator named CPk.
std::optional<int> cpn_index(std::string_view name);

GradedElement genus_extend(const GenusTable& table, const GradedElement& expr);

}  // namespace cobord::genera
