#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "etaforge/cohomology.hpp"
#include "etaforge/eta.hpp"
#include "etaforge/flow.hpp"
#include "etaforge/forms.hpp"
#include "etaforge/hodge.hpp"
#include "etaforge/measure.hpp"
#include "etaforge/spectrum.hpp"

namespace etaforge::io {

using nlohmann::json;

inline constexpr const char* kSchema = "etaforge/1";

json to_json(const Rational& q);
/// Accepts "p/q" strings, decimal strings and JSON integers.
Rational rational_from_json(const json& j);

json to_json(const ConventionSet& c);
ConventionSet conventions_from_json(const json& j);

json to_json(const EtaValue& v);
json to_json(const QuadSurd& s);
json to_json(const EigRecord& r);
json to_json(const FlowResult& f);
json to_json(const ApsCheck& a);
json to_json(const CalibrationReport& r);
json to_json(const LaplaceCheck& c);
json to_json(const NearZero& n);
json to_json(const IdentityReport& r);
json to_json(const Geometry& g);

/// {"preset": "surface", "genus", "degree"} | {"preset": "projective", "m", "degree"} |
/// {"preset": "explicit", "m", "topIntegral", "c1L", "c1K", "tangentRoots"}
Geometry geometry_from_json(const json& j);
/// {"kind": "surface" | "hrrVanishing" | "explicitTable", ...}; absent means the preset default.
HodgeProvider hodge_from_json(const json& j, const json& geometryDesc, const Geometry& g);
/// {"M": "p/q", "entries": [{"k", "p", "muSq", "e"}]}
DolbeaultProvider dolbeault_from_json(const json& j);

/// Sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace etaforge::io
