#include "cobord/algebra/io.hpp"

#include <set>

#include "cobord/error.hpp"

namespace cobord::algebra {

using nlohmann::json;

RingPtr ring_from_json(const json& j) {
  try {
    static const std::set<std::string> keys{"generators", "base", "window"};
    for (const auto& [k, v] : j.items()) {
      if (!keys.count(k)) throw ParseError("unknown ring key '" + k + "'");
    }
    std::vector<Generator> gens;
    if (j.contains("generators")) {
      for (const auto& g : j.at("generators")) {
        for (const auto& [k, v] : g.items()) {
          if (k != "name" && k != "deg" && k != "invertible") throw ParseError("unknown generator key '" + k + "'");
        }
        gens.push_back({g.at("name").get<std::string>(), g.at("deg").get<int>(), g.value("invertible", false)});
      }
    }
    Base base = Base::rationals;
    if (j.contains("base")) {
      const auto b = j.at("base").get<std::string>();
      if (b == "Z") {
        base = Base::integers;
      } else if (b != "Q") {
        throw ParseError("base must be \"Q\" or \"Z\"");
      }
    }
    DegreeWindow window;
    if (j.contains("window")) {
      const auto& w = j.at("window");
      if (!w.is_array() || w.size() != 2) throw ParseError("window must be [lo, hi]");
      window = {w[0].get<int>(), w[1].get<int>()};
    }
    return make_ring(std::move(gens), base, window);
  } catch (const json::exception& e) {
    throw ParseError(std::string("ring spec: ") + e.what());
  }
}

json ring_to_json(const GradedRingSpec& ring) {
  json gens = json::array();
  for (const auto& g : ring.generators()) {
    gens.push_back({{"name", g.name}, {"deg", g.degree}, {"invertible", g.invertible}});
  }
  return {{"generators", gens},
          {"base", ring.base() == Base::integers ? "Z" : "Q"},
          {"window", {ring.window().lo, ring.window().hi}}};
}

namespace {

RingPtr extended_ring(const RingPtr& ring, const std::vector<SeriesVariable>& variables) {
  std::vector<Generator> gens = ring->generators();
  for (const auto& v : variables) {
    if (ring->index_of(v.name)) throw DomainError("series variable '" + v.name + "' shadows a ring generator");
    gens.push_back({v.name, v.degree, false});
  }
  return std::make_shared<const GradedRingSpec>(std::move(gens), ring->base(), DegreeWindow{-(1 << 20), 1 << 20});
}

}  // namespace

std::string series_to_text(const TruncatedSeries& s) {
  const auto extended = extended_ring(s.ring(), s.variables());
  GradedElement::Terms terms;
  for (const auto& [e, c] : s.coefficients()) {
    for (const auto& [f, q] : c.terms()) {
      Exponent g = f;
      g.insert(g.end(), e.begin(), e.end());
      terms.emplace(std::move(g), q);
    }
  }
  return GradedElement(extended, std::move(terms)).to_string();
}

TruncatedSeries parse_series(RingPtr ring, std::vector<SeriesVariable> variables, int order,
                             std::string_view text) {
  // Parse in the ring extended by the series variables, then split exponents.
  const auto extended = extended_ring(ring, variables);
  const auto parsed = GradedElement::parse(extended, text);
  TruncatedSeries s(ring, variables, order);
  const std::size_t n = ring->size();
  for (const auto& [e, c] : parsed.terms()) {
    Exponent ring_part(e.begin(), e.begin() + static_cast<long>(n));
    Exponent series_part(e.begin() + static_cast<long>(n), e.end());
    s.set_coefficient(series_part, s.coefficient(series_part) + GradedElement::monomial(ring, ring_part, c));
  }
  return s;
}

json series_to_json(const TruncatedSeries& s) {
  json vars = json::array();
  for (const auto& v : s.variables()) vars.push_back({{"name", v.name}, {"deg", v.degree}});
  json terms = json::array();
  for (const auto& [e, c] : s.coefficients()) terms.push_back({{"exp", e}, {"coeff", c.to_string()}});
  return {{"variables", vars}, {"order", s.order()}, {"terms", terms}};
}

}  // namespace cobord::algebra
