#include "cobord/fgl/tor.hpp"

#include <algorithm>

#include "cobord/algebra/linear.hpp"
#include "cobord/error.hpp"

namespace cobord::fgl {

using algebra::Exponent;
using algebra::GradedElement;
using algebra::GradedRingSpec;
using algebra::Rational;
using algebra::RationalMatrix;

namespace {

void monomials_rec(const GradedRingSpec& ring, std::size_t i, int remaining, Exponent& cur,
                   std::vector<Exponent>& out) {
  if (i == ring.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const int d = ring.generator(i).degree;
  for (int k = 0; k * d >= remaining; ++k) {
    cur[i] = k;
    monomials_rec(ring, i + 1, remaining - k * d, cur, out);
  }
  cur[i] = 0;
}

void require_connected_rational(const GradedRingSpec& ring, const char* what) {
  if (ring.base() != algebra::Base::rationals) throw DomainError(std::string(what) + " ring must have a rational base");
  if (!ring.is_connected()) throw DomainError(std::string(what) + " ring must be connected (generators of negative degree)");
}

// Free module sum_k R e_k in one degree: basis of pairs (k, monomial).
class FreePiece {
 public:
  FreePiece(const GradedRingSpec& ring, const std::vector<int>& degrees, int d, std::size_t max_basis) {
    for (std::size_t k = 0; k < degrees.size(); ++k) {
      for (auto& m : monomial_basis(ring, d - degrees[k])) {
        index_.emplace(std::make_pair(k, m), basis_.size());
        basis_.emplace_back(k, std::move(m));
        if (basis_.size() > max_basis) throw ResourceError("graded piece exceeds the basis bound");
      }
    }
  }
  std::size_t size() const { return basis_.size(); }
  const std::pair<std::size_t, Exponent>& at(std::size_t i) const { return basis_[i]; }
  std::size_t index(std::size_t k, const Exponent& m) const {
    auto it = index_.find({k, m});
    if (it == index_.end()) throw Error("monomial outside the graded piece");
    return it->second;
  }

 private:
  std::vector<std::pair<std::size_t, Exponent>> basis_;
  std::map<std::pair<std::size_t, Exponent>, std::size_t> index_;
};

// Coordinates of sum_k (m * entries[k]) e_k in `piece`.
void add_image(const FreePiece& piece, const std::vector<GradedElement>& entries, const GradedElement& m,
               std::vector<Rational>& out) {
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].is_zero()) continue;
    const auto product = m * entries[k];
    for (const auto& [e, c] : product.terms()) out[piece.index(k, e)] += c;
  }
}

RationalMatrix image_matrix(const FreePiece& from, const FreePiece& to, const algebra::RingPtr& ring,
                            const std::vector<std::vector<GradedElement>>& columns) {
  RationalMatrix a(to.size(), from.size());
  std::vector<Rational> col(to.size());
  for (std::size_t c = 0; c < from.size(); ++c) {
    std::fill(col.begin(), col.end(), Rational(0));
    const auto& [k, m] = from.at(c);
    add_image(to, columns[k], GradedElement::monomial(ring, m), col);
    for (std::size_t r = 0; r < to.size(); ++r) a(r, c) = col[r];
  }
  return a;
}

}  // namespace

std::vector<Exponent> monomial_basis(const GradedRingSpec& ring, int degree) {
  std::vector<Exponent> out;
  if (degree > 0) return out;
  Exponent cur(ring.size(), 0);
  monomials_rec(ring, 0, degree, cur, out);
  return out;
}

void ModulePresentation::validate() const {
  require_connected_rational(*ring, "module");
  if (relations.size() != relation_degrees.size()) throw DomainError("one degree per relation is required");
  for (std::size_t j = 0; j < relations.size(); ++j) {
    if (relations[j].size() != generator_degrees.size()) throw DomainError("relation length differs from generator count");
    for (std::size_t i = 0; i < relations[j].size(); ++i) {
      const auto& a = relations[j][i];
      if (!algebra::same_ring(a.ring(), ring)) throw MismatchError("relation entry in another ring");
      const int want = relation_degrees[j] - generator_degrees[i];
      if (!a.is_zero() && a.degree() != want) {
        throw DomainError("relation " + std::to_string(j) + " entry " + std::to_string(i) +
                          " must be homogeneous of degree " + std::to_string(want));
      }
    }
  }
}

TorTable tor1(const ModulePresentation& m, const algebra::RingMap& map, DegreeWindow window, std::size_t max_basis) {
  m.validate();
  if (window.lo > window.hi) throw DomainError("empty degree window");
  if (!algebra::same_ring(map.source(), m.ring)) throw MismatchError("ring map source differs from the module ring");
  const auto& target = map.target();
  require_connected_rational(*target, "target");
  for (std::size_t i = 0; i < map.images().size(); ++i) {
    const auto& im = map.images()[i];
    if (!im.is_zero() && im.degree() != m.ring->generator(i).degree) {
      throw DomainError("ring map does not preserve degrees");
    }
  }
  if (m.ring->window().lo > window.lo || target->window().lo > window.lo) {
    throw DomainError("ring degree windows must reach the bottom of the Tor window");
  }

  // Minimal syzygies of the relations, degree by degree from the top down.
  std::vector<std::vector<GradedElement>> syz;
  std::vector<int> syz_degrees;
  if (!m.relation_degrees.empty()) {
    const int top = *std::max_element(m.relation_degrees.begin(), m.relation_degrees.end());
    for (int d = top; d >= window.lo; --d) {
      const FreePiece f1(*m.ring, m.relation_degrees, d, max_basis);
      if (f1.size() == 0) continue;
      const FreePiece f0(*m.ring, m.generator_degrees, d, max_basis);
      const auto kernel = algebra::nullspace(image_matrix(f1, f0, m.ring, m.relations));
      if (kernel.empty()) continue;
      algebra::SpanBuilder known(f1.size());
      for (std::size_t k = 0; k < syz.size(); ++k) {
        for (const auto& mono : monomial_basis(*m.ring, d - syz_degrees[k])) {
          std::vector<Rational> v(f1.size());
          add_image(f1, syz[k], GradedElement::monomial(m.ring, mono), v);
          known.add(std::move(v));
        }
      }
      for (const auto& v : kernel) {
        if (!known.add(v)) continue;
        std::vector<GradedElement> s(m.relation_degrees.size(), GradedElement::zero(m.ring));
        for (std::size_t c = 0; c < v.size(); ++c) {
          if (v[c] == 0) continue;
          const auto& [j, mono] = f1.at(c);
          s[j] += GradedElement::monomial(m.ring, mono, v[c]);
        }
        syz.push_back(std::move(s));
        syz_degrees.push_back(d);
      }
    }
  }

  auto push = [&](const std::vector<std::vector<GradedElement>>& cols) {
    std::vector<std::vector<GradedElement>> out;
    for (const auto& col : cols) {
      std::vector<GradedElement> c;
      for (const auto& a : col) c.push_back(map.apply(a));
      out.push_back(std::move(c));
    }
    return out;
  };
  const auto rel_t = push(m.relations);
  const auto syz_t = push(syz);

  TorTable table;
  table.syzygy_degrees = syz_degrees;
  for (int d = window.hi; d >= window.lo; --d) {
    const FreePiece f1(*target, m.relation_degrees, d, max_basis);
    std::size_t dim = f1.size();
    if (dim > 0) {
      const FreePiece f0(*target, m.generator_degrees, d, max_basis);
      const FreePiece f2(*target, syz_degrees, d, max_basis);
      dim -= algebra::rank(image_matrix(f1, f0, target, rel_t));
      dim -= algebra::rank(image_matrix(f2, f1, target, syz_t));
    }
    table.degrees.push_back({d, dim, false});
  }
  return table;
}

}  // namespace cobord::fgl
