#include <random>

#include "doctest.h"
#include "oracle.hpp"

#include "cobord/algebra/io.hpp"
#include "cobord/error.hpp"
#include "cobord/fgl/fgl.hpp"
#include "cobord/fgl/io.hpp"
#include "cobord/fgl/tor.hpp"

using namespace cobord;
using namespace cobord::algebra;
using namespace cobord::fgl;

namespace {

TruncatedSeries xseries(RingPtr ring, int order, std::string_view text) {
  return parse_series(std::move(ring), {{"x", 2}}, order, text);
}

TruncatedSeries dense_log(const oracle::Dense& d, int order) {
  std::vector<GradedElement> cs;
  for (const auto& q : d) cs.push_back(GradedElement::constant(rationals_ring(), q));
  return TruncatedSeries::from_coefficients(rationals_ring(), {"x", 2}, order, cs);
}

RingPtr qx() { return make_ring({{"x", -2}}); }

}  // namespace

TEST_CASE("validation of formal group laws") {
  CHECK(fgl_validate(named_fgl("additive", 6)).valid);
  CHECK(fgl_validate(named_fgl("mult-laurent", 6)).valid);
  CHECK(fgl_validate(named_fgl("mult-u", 6)).valid);
  const auto bad = FormalGroupLaw::parse(integers_ring(), 4, "x + y + x^2");
  const auto r = fgl_validate(bad);
  CHECK_FALSE(r.valid);
  CHECK(r.axiom == "unit");
  CHECK(r.monomial == "x^2");
  const auto skew = FormalGroupLaw::parse(integers_ring(), 4, "x + y + x*y^2");
  CHECK(fgl_validate(skew).axiom == "commutativity");
  const auto nonassoc = FormalGroupLaw::parse(integers_ring(), 4, "x + y + x^2*y^2");
  CHECK(fgl_validate(nonassoc).axiom == "associativity");
}

TEST_CASE("logarithms") {
  CHECK(fgl_log(FormalGroupLaw::parse(rationals_ring(), 4, "x + y")) == xseries(rationals_ring(), 4, "x"));
  const auto mult = FormalGroupLaw::parse(rationals_ring(), 4, "x + y - x*y");
  CHECK(fgl_log(mult) == xseries(rationals_ring(), 4, "x + 1/2*x^2 + 1/3*x^3 + 1/4*x^4"));
  CHECK_THROWS_AS(fgl_log(named_fgl("multiplicative", 4)), DivisionError);

  oracle::Dense d(9);
  for (int n = 1; n <= 8; ++n) d[static_cast<std::size_t>(n)] = oracle::Q(1, n);
  const auto f = fgl_from_log(dense_log(d, 8));
  CHECK(f.series() == parse_series(rationals_ring(), FormalGroupLaw::variables(), 8, "x + y - x*y"));
  CHECK(fgl_validate(f).valid);
}

TEST_CASE("log and from_log round trip on random logarithms") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (int t = 0; t < 8; ++t) {
    oracle::Dense d(7);
    d[1] = 1;
    for (int k = 2; k <= 6; ++k) d[static_cast<std::size_t>(k)] = oracle::Q(num(rng), den(rng));
    const auto l = dense_log(d, 6);
    const auto f = fgl_from_log(l);
    CHECK(fgl_validate(f).valid);
    CHECK(fgl_log(f) == l);
  }
}

TEST_CASE("rational universal law") {
  const auto u = universal_fgl_rational(6);
  CHECK(fgl_validate(u).valid);
  const auto& ring = u.ring();
  // The xy coefficient is -[CP1]; the sign matches the law x + y - xy at [CPn] = 1.
  CHECK(u.series().coefficient(Exponent{1, 1}).to_string() == "-CP1");
  CHECK(u.series().coefficient(Exponent{1, 1}).degree() == -2);
  std::map<std::string, Rational> zeros, ones;
  for (const auto& g : ring->generators()) {
    zeros[g.name] = 0;
    ones[g.name] = 1;
  }
  auto q = rationals_ring();
  auto spec = [&](const std::map<std::string, Rational>& v) {
    return u.series().map_coefficients(q, [&](const GradedElement& c) { return specialize(c, q, v); });
  };
  CHECK(spec(zeros) == parse_series(q, FormalGroupLaw::variables(), 6, "x + y"));
  CHECK(spec(ones) == parse_series(q, FormalGroupLaw::variables(), 6, "x + y - x*y"));
  CHECK_THROWS_AS(universal_fgl_rational(1), DomainError);
}

TEST_CASE("Quillen classification") {
  const auto add = FormalGroupLaw::parse(rationals_ring(), 6, "x + y");
  const auto c0 = quillen_classify(add);
  CHECK(c0.matches);
  for (const auto& im : c0.theta.images()) CHECK(im.is_zero());

  const auto mult = FormalGroupLaw::parse(rationals_ring(), 8, "x + y - x*y");
  const auto c1 = quillen_classify(mult);
  CHECK(c1.matches);
  for (const auto& im : c1.theta.images()) CHECK(im.is_one());

  const auto c2 = quillen_classify(named_fgl("mult-laurent-q", 6));
  CHECK(c2.matches);
  for (int n = 1; n < 6; ++n) {
    CHECK(c2.theta.image("CP" + std::to_string(n)) ==
          GradedElement::generator(c2.theta.target(), "u", n));
  }
  CHECK_THROWS_AS(quillen_classify(named_fgl("multiplicative", 4)), DomainError);

  const auto todd = genera::genus_table(genera::builtin_genus("todd", 8), 8);
  const auto ct = quillen_classify(todd, 8);
  CHECK(ct.image.series() == mult.series());
  const auto none = genera::genus_table(
      genera::CharacteristicSeries(TruncatedSeries::one(rationals_ring(), {genera::z_variable()}, 8)), 8);
  CHECK(quillen_classify(none, 8).image.series() == parse_series(rationals_ring(), FormalGroupLaw::variables(), 8, "x + y"));
}

TEST_CASE("p-series") {
  CHECK(p_series(named_fgl("additive", 4), 3) == xseries(integers_ring(), 4, "3*x"));
  CHECK(p_series(named_fgl("multiplicative", 4), 2) == xseries(integers_ring(), 4, "2*x - x^2"));
  const auto mu = named_fgl("mult-u", 5);
  CHECK(p_series(mu, 3) == xseries(mu.ring(), 5, "3*x - 3*u*x^2 + u^2*x^3"));
  CHECK_THROWS_AS(p_series(mu, 4), DomainError);

  const auto u = universal_fgl_rational(6);
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) CHECK(n_series(u, m + n) == u.apply(n_series(u, m), n_series(u, n)));
  }
}

TEST_CASE("Landweber verdicts") {
  const auto add = landweber_check(named_fgl("additive", 4), {2, 3, 5}, 2);
  for (const auto& v : add) CHECK(v.verdict == "fails-at-stage-1");

  const auto lau = landweber_check(named_fgl("mult-laurent", 4), {2, 3, 5}, 2);
  for (const auto& v : lau) {
    CHECK(v.verdict == "exact-through-stage-2");
    CHECK(v.stages.at(1).status == "unit");
    CHECK(v.stages.at(2).status == "vacuous");
  }

  const auto poly = landweber_check(named_fgl("mult-u", 4), {2, 3, 5}, 2);
  for (const auto& v : poly) {
    CHECK(v.verdict == "fails-at-stage-2");
    CHECK(v.stages.at(1).status == "regular");
  }
  CHECK(poly[1].stages[1].v == "u^2");

  const auto rat = landweber_check(universal_fgl_rational(4), {2}, 3);
  CHECK(rat[0].verdict == "exact-through-stage-3");

  const auto trunc = FormalGroupLaw::parse(make_ring({{"u", -2}}, Base::integers), 4, "x + y - u*x*y");
  CHECK(landweber_check(trunc, {3}, 2)[0].verdict == "inconclusive");
}

TEST_CASE("Tor_1 tables") {
  auto ring = qx();
  const auto x = GradedElement::generator(ring, "x");
  auto q = rationals_ring();
  RingMap to_q(ring, q, {GradedElement::zero(q)});

  ModulePresentation free{ring, {0}, {}, {}};
  for (const auto& d : tor1(free, to_q, {-8, 0}).degrees) CHECK(d.dim == 0);

  ModulePresentation point{ring, {0}, {-2}, {{x}}};
  for (const auto& d : tor1(point, to_q, {-8, 0}).degrees) CHECK(d.dim == (d.degree == -2 ? 1u : 0u));

  ModulePresentation dual{ring, {0}, {-4}, {{x * x}}};
  const auto t = tor1(dual, to_q, {-8, 0});
  for (const auto& d : t.degrees) {
    CHECK(d.dim == (d.degree == -4 ? 1u : 0u));
    CHECK_FALSE(d.partial);
  }

  // A redundant relation x * (x^2) changes nothing.
  ModulePresentation redundant{ring, {0}, {-4, -6}, {{x * x}, {x * x * x}}};
  const auto t2 = tor1(redundant, to_q, {-8, 0});
  for (std::size_t i = 0; i < t.degrees.size(); ++i) CHECK(t.degrees[i].dim == t2.degrees[i].dim);
  CHECK(t2.syzygy_degrees == std::vector<int>{-6});

  // Along the identity the module is its own resolution: Tor_1 vanishes.
  RingMap id(ring, ring, {x});
  for (const auto& d : tor1(dual, id, {-8, 0}).degrees) CHECK(d.dim == 0);
  CHECK_THROWS_AS(tor1(dual, to_q, {0, -8}), DomainError);
  ModulePresentation wrong{ring, {0}, {-2}, {{x * x}}};
  CHECK_THROWS_AS(wrong.validate(), DomainError);
}

TEST_CASE("Tor_1 over two generators") {
  auto ring = make_ring({{"a", -2}, {"b", -4}});
  const auto a = GradedElement::generator(ring, "a");
  const auto b = GradedElement::generator(ring, "b");
  auto q = rationals_ring();
  RingMap to_q(ring, q, {GradedElement::zero(q), GradedElement::zero(q)});
  // Q as a module: Koszul complex gives Tor_1 in degrees -2 and -4.
  ModulePresentation pt{ring, {0}, {-2, -4}, {{a}, {b}}};
  const auto t = tor1(pt, to_q, {-10, 0});
  for (const auto& d : t.degrees) CHECK(d.dim == ((d.degree == -2 || d.degree == -4) ? 1u : 0u));
  CHECK(t.syzygy_degrees == std::vector<int>{-6});
  // a maps to zero, so Tor_1(Q[a,b]/(a), Q[b]) is Q[b] shifted by -2.
  auto qb = make_ring({{"b", -4}});
  RingMap kill_a(ring, qb, {GradedElement::zero(qb), GradedElement::generator(qb, "b")});
  ModulePresentation mod_a{ring, {0}, {-2}, {{a}}};
  const auto t3 = tor1(mod_a, kill_a, {-10, 0});
  for (const auto& d : t3.degrees) CHECK(d.dim == (d.degree <= -2 && (d.degree + 2) % 4 == 0 ? 1u : 0u));
}

TEST_CASE("json formats") {
  const auto j = nlohmann::json::parse(
      R"({"ring":{"generators":[{"name":"u","deg":-2,"invertible":true}],"base":"Z"},"order":6,"series":"x + y - u*x*y","polynomial":true})");
  const auto f = fgl_from_json(j);
  CHECK(fgl_validate(f).valid);
  CHECK(fgl_from_json(fgl_to_json(f)).series() == f.series());
  CHECK_THROWS_AS(fgl_from_json(nlohmann::json::parse(R"({"ring":{},"order":3,"series":"x+y","extra":1})")), ParseError);

  const auto m = module_from_json(nlohmann::json::parse(
      R"({"ring":{"generators":[{"name":"x","deg":-2}]},"generators":[0],"relations":[{"degree":-4,"entries":["x^2"]}]})"));
  const auto map = ring_map_from_json(nlohmann::json::parse(R"({"target":{},"images":{"x":"0"}})"), m.ring);
  const auto t = tor1(m, map, {-6, 0});
  CHECK(t.degrees.at(4).degree == -4);
  CHECK(t.degrees.at(4).dim == 1);
  CHECK_THROWS_AS(ring_map_from_json(nlohmann::json::parse(R"({"target":{},"images":{}})"), m.ring), ParseError);
}
