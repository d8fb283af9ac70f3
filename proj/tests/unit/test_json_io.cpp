#include <doctest.h>

#include "etaforge/errors.hpp"
#include "etaforge/json_io.hpp"

using namespace etaforge;
using io::json;

TEST_CASE("rationals serialize as reduced p/q strings") {
  CHECK(io::to_json(Rational(6, 8)) == json("3/4"));
  CHECK(io::to_json(Rational(-119, 1200)) == json("-119/1200"));
  CHECK(io::to_json(Rational(5)) == json("5"));
  CHECK(io::rational_from_json(json("-2/6")) == Rational(-1, 3));
  CHECK(io::rational_from_json(json(4)) == Rational(4));
  CHECK_THROWS_AS(io::rational_from_json(json(0.5)), UsageError);
}

TEST_CASE("conventions round-trip, bare or wrapped") {
  ConventionSet c;
  c.signC = 1;
  c.flowFactor = 2;
  c.transgressionScale = Rational(-1, 4);
  c.kappa = Rational(1);
  json j = io::to_json(c);
  CHECK(io::conventions_from_json(j) == c);
  CHECK(io::conventions_from_json(json{{"conventions", j}}) == c);
  j["signC"] = 3;
  CHECK_THROWS_AS(io::conventions_from_json(j), UsageError);
  CHECK_THROWS_AS(io::conventions_from_json(json{{"signC", 1}}), UsageError);
}

TEST_CASE("dump is deterministic with sorted keys") {
  json j{{"zeta", 1}, {"alpha", json{{"b", 2}, {"a", 1}}}, {"schema", io::kSchema}};
  const std::string s = io::dump(j);
  CHECK(s.find("\"alpha\"") < s.find("\"schema\""));
  CHECK(s.find("\"a\"") < s.find("\"b\""));
  CHECK(s == io::dump(json::parse(s)));
  CHECK(s.back() == '\n');
  // shortest round-trip decimals
  CHECK(json(0.1).dump() == "0.1");
  CHECK(json(1e-12).dump() == "1e-12");
}

TEST_CASE("geometry descriptors") {
  auto s = io::geometry_from_json(json{{"preset", "surface"}, {"genus", 2}, {"degree", "3"}});
  CHECK(s.m == 1);
  CHECK(s.c1L == Rational(3));
  CHECK(s.c1K == Rational(1));
  auto p = io::geometry_from_json(json{{"preset", "projective"}, {"m", 3}, {"degree", 2}});
  CHECK(p.m == 3);
  CHECK(p.tangentRoots.size() == 4);
  auto e = io::geometry_from_json(
      json{{"preset", "explicit"}, {"m", 1}, {"c1L", "1/2"}, {"c1K", "-1"}, {"tangentRoots", {"2"}}});
  CHECK(e.c1L == Rational(1, 2));
  CHECK_THROWS_AS(io::geometry_from_json(json{{"preset", "torus"}}), UsageError);
  CHECK_THROWS_AS(io::geometry_from_json(json{{"preset", "explicit"}, {"m", 1}}), UsageError);
  json back = io::to_json(p);
  CHECK(back["c1K"] == json("-2"));
}

TEST_CASE("hodge descriptors default by preset") {
  json gd{{"preset", "surface"}, {"genus", 1}, {"degree", 2}};
  auto g = io::geometry_from_json(gd);
  auto bare = io::hodge_from_json(json::object(), gd, g);
  CHECK_THROWS_AS(bare.hodge_number(0, 0), UnknownHodgeData);
  auto withh = io::hodge_from_json(json{{"h00", 1}}, gd, g);
  CHECK(withh.hodge_number(1, 0) == 1);

  json pd{{"preset", "projective"}, {"m", 1}, {"degree", 1}};
  auto pg = io::geometry_from_json(pd);
  auto hp = io::hodge_from_json(json(), pd, pg);
  CHECK(hp.hodge_number(0, 0) == 0);
  CHECK(hp.hodge_number(0, 4) == 4);

  auto tab = io::hodge_from_json(json{{"kind", "explicitTable"}, {"table", {{{"p", 0}, {"k", 1}, {"h", 2}}}}}, pd, pg);
  CHECK(tab.hodge_number(1, -1) == 2);
  CHECK_THROWS_AS(io::hodge_from_json(json{{"kind", "magic"}}, pd, pg), UsageError);
}

TEST_CASE("dolbeault descriptors") {
  auto dp = io::dolbeault_from_json(
      json{{"M", "1/10"}, {"entries", {{{"k", 0}, {"p", 0}, {"muSq", "2"}, {"e", 3}}}}});
  CHECK(dp.M() == Rational(1, 10));
  CHECK(dp.e(0, 0, Rational(2)) == 3);
  CHECK_THROWS_AS(io::dolbeault_from_json(json{{"M", "5"}, {"entries", {{{"k", 0}, {"p", 0}, {"muSq", "2"}, {"e", 1}}}}}),
                  InvalidDolbeaultData);
  CHECK_THROWS_AS(io::dolbeault_from_json(json::object()), UsageError);
}

TEST_CASE("eta and spectrum records carry exact fields") {
  auto g = surface_preset(0, Rational(1));
  auto hp = HodgeProvider::surface(0, 1);
  auto v = exact_eta(g, hp, Rational(0), Rational(1, 10), default_conventions());
  json j = io::to_json(v);
  CHECK(j["value"] == json("-119/1200"));
  CHECK(j.contains("conventions"));
  CHECK(j.contains("validityFlag"));
  CHECK(j["breakdown"].contains("endpointCorrection"));
  EigRecord rec{QuadSurd(Rational(1), Rational(1, 2), Rational(8)), 2, EigTag::type2plus, 1, 0, Rational(2)};
  json r = io::to_json(rec);
  CHECK(r["value"]["b"] == json("1"));
  CHECK(r["value"]["d"] == json("2"));
  CHECK(r["tag"] == json("type2plus"));
  CHECK(r["muSq"] == json("2"));
}
