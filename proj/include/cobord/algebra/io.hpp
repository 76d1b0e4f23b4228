#pragma once

#include <string_view>

#include "json.hpp"

#include "cobord/algebra/graded_element.hpp"
#include "cobord/algebra/series.hpp"

namespace cobord::algebra {

// {"generators":[{"name","deg","invertible"}], "base":"Q"|"Z", "window":[lo,hi]}
RingPtr ring_from_json(const nlohmann::json& j);
nlohmann::json ring_to_json(const GradedRingSpec& ring);

// Series text in the same syntax as elements, with the series variables
// appearing as extra factors: "x + y - u*x*y".
TruncatedSeries parse_series(RingPtr ring, std::vector<SeriesVariable> variables, int order,
                             std::string_view text);

// Text accepted by parse_series, without the truncation marker.
std::string series_to_text(const TruncatedSeries& s);

// {"variables":[{"name","deg"}], "order": n, "terms":[{"exp":[...], "coeff":"..."}]}
nlohmann::json series_to_json(const TruncatedSeries& s);

}  // namespace cobord::algebra
