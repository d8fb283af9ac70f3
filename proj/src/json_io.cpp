#include "etaforge/json_io.hpp"

#include "etaforge/errors.hpp"

namespace etaforge::io {

json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw UsageError("expected a rational string \"p/q\" or an integer, got " + j.dump());
}

json to_json(const ConventionSet& c) {
  return json{{"signC", c.signC},
              {"flowFactor", c.flowFactor},
              {"transgressionScale", to_json(c.transgressionScale)},
              {"kappa", to_json(c.kappa)}};
}

ConventionSet conventions_from_json(const json& j) {
  const json& c = j.contains("conventions") ? j.at("conventions") : j;
  ConventionSet out;
  try {
    out.signC = c.at("signC").get<int>();
    out.flowFactor = c.at("flowFactor").get<int>();
    out.transgressionScale = rational_from_json(c.at("transgressionScale"));
    out.kappa = c.contains("kappa") ? rational_from_json(c.at("kappa")) : Rational(2);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed conventions record: ") + e.what());
  }
  if (out.signC != 1 && out.signC != -1) throw UsageError("signC must be +1 or -1");
  if (out.flowFactor != 1 && out.flowFactor != 2) throw UsageError("flowFactor must be 1 or 2");
  return out;
}

json to_json(const EtaValue& v) {
  const auto& b = v.breakdown;
  json out{{"value", to_json(v.value)},
           {"valueDecimal", v.value.to_double()},
           {"breakdown",
            {{"adiabaticLimit", to_json(b.adiabaticLimit)},
             {"flowTerm", to_json(b.flowTerm)},
             {"sfClosed", to_json(b.sfClosed)},
             {"endpointCorrection", to_json(b.endpointCorrection)},
             {"transgressionTerm", to_json(b.transgressionTerm)}}},
           {"conventions", to_json(v.conventions)},
           {"validityFlag", v.validityFlag}};
  if (!v.caveat.empty()) out["caveat"] = v.caveat;
  return out;
}

json to_json(const QuadSurd& s) {
  return json{{"a", to_json(s.a())}, {"b", to_json(s.b())}, {"d", to_json(s.d())}, {"approx", s.to_double()}};
}

json to_json(const EigRecord& r) {
  json out{{"value", to_json(r.value)},
           {"multiplicity", r.multiplicity},
           {"tag", to_string(r.tag)},
           {"k", r.k},
           {"p", r.p}};
  out["muSq"] = r.muSq ? to_json(*r.muSq) : json(nullptr);
  return out;
}

json to_json(const FlowResult& f) {
  json cr = json::array();
  for (const auto& c : f.crossings)
    cr.push_back({{"parameterValue", to_json(c.parameterValue)},
                  {"k", c.k},
                  {"p", c.p},
                  {"multiplicity", c.multiplicity},
                  {"direction", c.direction}});
  return json{{"net", f.net}, {"crossings", cr}};
}

json to_json(const ApsCheck& a) {
  return json{{"lhs", to_json(a.lhs)}, {"rhs", to_json(a.rhs)}, {"pass", a.pass}};
}

json to_json(const CalibrationReport& r) {
  json out{{"conventions", to_json(r.conventions)},
           {"t1", r.t1},
           {"t2", r.t2},
           {"t3", r.t3},
           {"candidatesTested", r.candidatesTested},
           {"satisfyingT1T2", r.satisfyingT1T2},
           {"satisfyingAll", r.satisfyingAll}};
  if (!r.t3Deviation.empty()) out["t3Deviation"] = r.t3Deviation;
  return out;
}

json to_json(const LaplaceCheck& c) {
  return json{{"measured", c.measured}, {"target", c.target},   {"relError", c.relError},
              {"tailBound", c.tailBound}, {"sMax", c.sMax}};
}

json to_json(const NearZero& n) { return json{{"value", n.value}, {"ratio", n.ratio}}; }

json to_json(const IdentityReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  return json{{"checks", checks}, {"pass", r.all_pass()}};
}

json to_json(const Geometry& g) {
  json roots = json::array();
  for (const auto& r : g.tangentRoots) roots.push_back(to_json(r));
  return json{{"m", g.m},
              {"topIntegral", to_json(g.topIntegral)},
              {"c1L", to_json(g.c1L)},
              {"c1K", to_json(g.c1K)},
              {"tangentRoots", roots},
              {"label", g.label}};
}

namespace {

HodgeTable table_from_json(const json& j) {
  HodgeTable t;
  if (j.is_null()) return t;
  for (const auto& e : j) t[{e.at("p").get<int>(), e.at("k").get<long>()}] = e.at("h").get<long>();
  return t;
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

Geometry geometry_from_json(const json& j) {
  return guarded("geometry descriptor", [&] {
    const std::string preset = j.value("preset", "surface");
    if (preset == "surface") return surface_preset(j.value("genus", 0), rational_from_json(j.value("degree", json(1))));
    if (preset == "projective") return projective_preset(j.value("m", 1), rational_from_json(j.value("degree", json(1))));
    if (preset == "explicit") {
      std::vector<Rational> roots;
      for (const auto& r : j.at("tangentRoots")) roots.push_back(rational_from_json(r));
      return explicit_geometry(j.at("m").get<int>(), rational_from_json(j.value("topIntegral", json(1))),
                               rational_from_json(j.at("c1L")), rational_from_json(j.at("c1K")), std::move(roots),
                               j.value("label", std::string("explicit")));
    }
    throw UsageError("unknown geometry preset '" + preset + "'");
  });
}

HodgeProvider hodge_from_json(const json& j, const json& geometryDesc, const Geometry& g) {
  return guarded("hodge descriptor", [&]() -> HodgeProvider {
    const std::string preset = geometryDesc.value("preset", "surface");
    std::string kind = j.is_object() ? j.value("kind", std::string()) : std::string();
    if (kind.empty()) kind = preset == "surface" ? "surface" : "hrrVanishing";
    if (kind == "surface") {
      if (g.m != 1) throw UsageError("surface Hodge provider needs a surface geometry");
      const Rational deg = g.c1L;
      if (!deg.is_integer()) throw UsageError("surface Hodge provider needs an integral degree");
      std::optional<long> h00;
      if (j.is_object() && j.contains("h00") && !j.at("h00").is_null()) h00 = j.at("h00").get<long>();
      const int genus = geometryDesc.value("genus", 0);
      return HodgeProvider::surface(genus, deg.to_long(), h00,
                                    table_from_json(j.is_object() ? j.value("exceptional", json()) : json()));
    }
    if (kind == "hrrVanishing") {
      HodgeTable t = table_from_json(j.is_object() ? j.value("table", json()) : json());
      if (!j.is_object() || !j.contains("table"))
        for (int p = 0; p <= g.m; ++p) t.emplace(std::make_pair(p, 0L), 0L);
      return HodgeProvider::hrr_vanishing(g, j.is_object() ? j.value("k0", 1L) : 1L, std::move(t));
    }
    if (kind == "explicitTable") return HodgeProvider::explicit_table(g.m, table_from_json(j.at("table")));
    throw UsageError("unknown hodge provider kind '" + kind + "'");
  });
}

DolbeaultProvider dolbeault_from_json(const json& j) {
  return guarded("dolbeault descriptor", [&] {
    std::vector<DolbeaultEntry> entries;
    if (j.contains("entries"))
      for (const auto& e : j.at("entries"))
        entries.push_back({e.at("k").get<long>(), e.at("p").get<int>(), rational_from_json(e.at("muSq")),
                           e.at("e").get<long>()});
    return DolbeaultProvider(std::move(entries), rational_from_json(j.at("M")));
  });
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace etaforge::io
