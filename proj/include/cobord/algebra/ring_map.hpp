#pragma once

#include <map>
#include <string>
#include <vector>

#include "cobord/algebra/graded_element.hpp"
#include "cobord/algebra/series.hpp"

namespace cobord::algebra {

// Degree-preserving homomorphism of graded rings, fixed by the images of the
// source generators. A target without generators is treated as ungraded and
// accepts any rational images.
class RingMap {
 public:
  RingMap(RingPtr source, RingPtr target, std::vector<GradedElement> images);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<GradedElement>& images() const { return images_; }
  bool graded() const { return target_->size() > 0; }
  const GradedElement& image(std::string_view generator) const;

  GradedElement apply(const GradedElement& x) const;
  TruncatedSeries apply(const TruncatedSeries& s) const;

 private:
  GradedElement power(std::size_t i, int k) const;

  RingPtr source_;
  RingPtr target_;
  std::vector<GradedElement> images_;
  std::vector<GradedElement> inverse_images_;  // only for invertible generators
};

// Ungraded specialisation: replace the named generators by rational numbers,
// landing in `target` (whose generators must be the remaining ones).
GradedElement specialize(const GradedElement& x, const RingPtr& target,
                         const std::map<std::string, Rational>& values);

}  // namespace cobord::algebra
