#include "cobord/fgl/io.hpp"

#include <set>

#include "cobord/algebra/io.hpp"
#include "cobord/error.hpp"

namespace cobord::fgl {

using nlohmann::json;

namespace {

void only_keys(const json& j, const std::set<std::string>& keys, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be an object");
  for (const auto& [k, v] : j.items()) {
    if (!keys.count(k)) throw ParseError("unknown " + std::string(what) + " key '" + k + "'");
  }
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

FormalGroupLaw fgl_from_json(const json& j) {
  return guarded("formal group law", [&] {
    only_keys(j, {"ring", "order", "series", "polynomial"}, "formal group law");
    auto ring = algebra::ring_from_json(j.at("ring"));
    return FormalGroupLaw::parse(ring, j.at("order").get<int>(), j.at("series").get<std::string>(),
                                 j.value("polynomial", false));
  });
}

json fgl_to_json(const FormalGroupLaw& f) {
  return {{"ring", algebra::ring_to_json(*f.ring())},
          {"order", f.order()},
          {"series", algebra::series_to_text(f.series())},
          {"polynomial", f.polynomial()}};
}

ModulePresentation module_from_json(const json& j) {
  return guarded("module", [&] {
    only_keys(j, {"ring", "generators", "relations"}, "module");
    ModulePresentation m;
    m.ring = algebra::ring_from_json(j.at("ring"));
    m.generator_degrees = j.at("generators").get<std::vector<int>>();
    if (j.contains("relations")) {
      for (const auto& r : j.at("relations")) {
        only_keys(r, {"degree", "entries"}, "relation");
        m.relation_degrees.push_back(r.at("degree").get<int>());
        std::vector<GradedElement> col;
        for (const auto& e : r.at("entries")) col.push_back(GradedElement::parse(m.ring, e.get<std::string>()));
        m.relations.push_back(std::move(col));
      }
    }
    m.validate();
    return m;
  });
}

algebra::RingMap ring_map_from_json(const json& j, const algebra::RingPtr& source) {
  return guarded("ring map", [&] {
    only_keys(j, {"target", "images"}, "ring map");
    auto target = algebra::ring_from_json(j.at("target"));
    const auto& imgs = j.at("images");
    for (const auto& [k, v] : imgs.items()) {
      if (!source->index_of(k)) throw ParseError("image given for unknown generator '" + k + "'");
    }
    std::vector<GradedElement> images;
    for (const auto& g : source->generators()) {
      if (!imgs.contains(g.name)) throw ParseError("no image for generator '" + g.name + "'");
      images.push_back(GradedElement::parse(target, imgs.at(g.name).get<std::string>()));
    }
    return algebra::RingMap(source, target, std::move(images));
  });
}

}  // namespace cobord::fgl
