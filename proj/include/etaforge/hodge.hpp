#pragma once

#include <map>
#include <optional>
#include <utility>
#include <variant>

#include "etaforge/cohomology.hpp"

namespace etaforge {

using HodgeTable = std::map<std::pair<int, long>, long>;

struct SurfaceHodge {
  int genus = 0;
  long degree = 1;
  std::optional<long> h00;  // h^{0,0}, i.e. h^0 of the chosen theta characteristic
  HodgeTable exceptional;
};

struct HrrVanishingHodge {
  Geometry geometry;
  long k0 = 1;
  HodgeTable table;
};

struct ExplicitHodge {
  int m = 1;
  HodgeTable table;
};

/// Source of h^{p,k} = dim H^p(X, K (x) L^k).
class HodgeProvider {
 public:
  using Variant = std::variant<SurfaceHodge, HrrVanishingHodge, ExplicitHodge>;

  explicit HodgeProvider(Variant v);

  static HodgeProvider surface(int genus, long degree, std::optional<long> h00 = std::nullopt,
                               HodgeTable exceptional = {});
  static HodgeProvider hrr_vanishing(Geometry g, long k0, HodgeTable table = {});
  static HodgeProvider explicit_table(int m, HodgeTable table);

  const Variant& variant() const { return v_; }
  int m() const;

  /// Throws UnknownHodgeData outside the ranges the provider can certify.
  long hodge_number(int p, long k) const;
  /// Same, but missing values come back as nullopt.
  std::optional<long> try_hodge_number(int p, long k) const;

 private:
  Variant v_;
};

long hodge_number(const HodgeProvider& hp, int p, long k);

}  // namespace etaforge
