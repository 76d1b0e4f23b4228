#include "cobord/algebra/ring_map.hpp"

#include "cobord/error.hpp"

namespace cobord::algebra {

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<GradedElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->size()) throw DomainError("ring map needs one image per source generator");
  inverse_images_.resize(images_.size(), GradedElement::zero(target_));
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto& g = source_->generator(i);
    const auto& im = images_[i];
    if (!same_ring(im.ring(), target_)) throw MismatchError("image of '" + g.name + "' not in target ring");
    if (target_->size() > 0 && !im.is_zero() && im.degree() != g.degree) {
      throw DomainError("image of '" + g.name + "' is not homogeneous of degree " + std::to_string(g.degree));
    }
    if (g.invertible) {
      if (im.terms().size() != 1 || abs(im.terms().begin()->second) != 1) {
        throw DomainError("image of invertible generator '" + g.name + "' must be a unit monomial");
      }
      const auto& [e, c] = *im.terms().begin();
      Exponent inv(e.size());
      for (std::size_t k = 0; k < e.size(); ++k) inv[k] = -e[k];
      inverse_images_[i] = GradedElement::monomial(target_, inv, c);
    }
  }
}

const GradedElement& RingMap::image(std::string_view generator) const {
  auto idx = source_->index_of(generator);
  if (!idx) throw DomainError("unknown generator '" + std::string(generator) + "'");
  return images_[*idx];
}

GradedElement RingMap::power(std::size_t i, int k) const {
  return k >= 0 ? images_[i].pow(static_cast<unsigned>(k)) : inverse_images_[i].pow(static_cast<unsigned>(-k));
}

GradedElement RingMap::apply(const GradedElement& x) const {
  if (!same_ring(x.ring(), source_)) throw MismatchError("element not in the source ring");
  GradedElement result = GradedElement::zero(target_);
  for (const auto& [e, c] : x.terms()) {
    GradedElement term = GradedElement::constant(target_, c);
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
      if (e[i] != 0) term *= power(i, e[i]);
    }
    result += term;
  }
  return result;
}

TruncatedSeries RingMap::apply(const TruncatedSeries& s) const {
  return s.map_coefficients(target_, [this](const GradedElement& c) { return apply(c); });
}

GradedElement specialize(const GradedElement& x, const RingPtr& target,
                         const std::map<std::string, Rational>& values) {
  const auto& src = *x.ring();
  std::vector<int> slot(src.size(), -1);
  for (std::size_t i = 0; i < src.size(); ++i) {
    const auto& name = src.generator(i).name;
    if (values.count(name)) continue;
    auto idx = target->index_of(name);
    if (!idx) throw DomainError("generator '" + name + "' has no value and is missing from the target");
    slot[i] = static_cast<int>(*idx);
  }
  GradedElement result = GradedElement::zero(target);
  for (const auto& [e, c] : x.terms()) {
    Rational coeff = c;
    Exponent f(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (slot[i] >= 0) {
        f[slot[i]] += e[i];
        continue;
      }
      const Rational& v = values.at(src.generator(i).name);
      if (v == 0 && e[i] < 0) throw DomainError("specialising an inverted generator to 0");
      Rational p = 1;
      for (int k = 0; k < std::abs(e[i]); ++k) p *= v;
      coeff *= (e[i] >= 0) ? p : Rational(1) / p;
    }
    result += GradedElement::monomial(target, f, coeff);
  }
  return result;
}

}  // namespace cobord::algebra
