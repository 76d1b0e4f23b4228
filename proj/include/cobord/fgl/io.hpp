#pragma once

#include "json.hpp"

#include "cobord/fgl/fgl.hpp"
#include "cobord/fgl/tor.hpp"

namespace cobord::fgl {

// {"ring": <ring spec>, "order": n, "series": "x + y - u*x*y", "polynomial": true}
FormalGroupLaw fgl_from_json(const nlohmann::json& j);
nlohmann::json fgl_to_json(const FormalGroupLaw& f);

// {"ring": <ring spec>, "generators": [deg, ...],
//  "relations": [{"degree": d, "entries": ["x", "0", ...]}, ...]}
ModulePresentation module_from_json(const nlohmann::json& j);

// {"target": <ring spec>, "images": {"x": "0", ...}}
algebra::RingMap ring_map_from_json(const nlohmann::json& j, const algebra::RingPtr& source);

}  // namespace cobord::fgl
