#include "etaforge/hodge.hpp"

#include "etaforge/errors.hpp"

namespace etaforge {

namespace {

void check_table(const HodgeTable& t) {
  for (const auto& [key, v] : t)
    if (v < 0)
      throw UsageError("negative Hodge number at (" + std::to_string(key.first) + "," +
                       std::to_string(key.second) + ")");
}

long lookup(const HodgeTable& t, int p, long k, const char* why) {
  auto it = t.find({p, k});
  if (it == t.end()) throw UnknownHodgeData(p, k, why);
  return it->second;
}

long surface_value(const SurfaceHodge& s, int p, long k) {
  const long kl = k * s.degree;
  const long gm1 = s.genus - 1;
  if (kl > gm1) return p == 0 ? kl : 0;
  if (kl < -gm1) return p == 0 ? 0 : -kl;
  if (auto it = s.exceptional.find({p, k}); it != s.exceptional.end()) return it->second;
  // Duality partner in the table.
  if (auto it = s.exceptional.find({1 - p, -k}); it != s.exceptional.end()) return it->second;
  if (k == 0 && s.h00) return *s.h00;  // h^{1,0} = h^{0,0} by duality
  // Riemann-Roch recovers one of the pair from the other.
  // The partner h^{1-p,k} may itself be tabulated directly or through duality.
  for (const auto& key : {std::make_pair(1 - p, k), std::make_pair(p, -k)})
    if (auto it = s.exceptional.find(key); it != s.exceptional.end())
      return p == 0 ? kl + it->second : it->second - kl;
  if (k == 0) throw UnknownHodgeData(p, k, "theta characteristic h^0 not supplied");
  throw UnknownHodgeData(p, k, "moduli-dependent range |kl| <= g-1");
}

long hrr_value(const HrrVanishingHodge& h, int p, long k, int depth) {
  const int m = h.geometry.m;
  if (k >= h.k0) {
    if (p > 0) return 0;
    Rational chi = hrr_chi_at(h.geometry, Rational(k));
    if (chi.sign() < 0)
      throw ProviderConsistencyError("chi(" + std::to_string(k) + ") = " + chi.str() +
                                     " is negative inside the declared vanishing range k >= " +
                                     std::to_string(h.k0));
    if (!chi.is_integer())
      throw ProviderConsistencyError("chi(" + std::to_string(k) + ") = " + chi.str() + " is not an integer");
    return chi.to_long();
  }
  if (k <= -h.k0 && depth == 0) return hrr_value(h, m - p, -k, 1);
  if (auto it = h.table.find({p, k}); it != h.table.end()) return it->second;
  if (auto it = h.table.find({m - p, -k}); it != h.table.end()) return it->second;
  throw UnknownHodgeData(p, k, "outside the declared vanishing range and not tabulated");
}

}  // namespace

HodgeProvider::HodgeProvider(Variant v) : v_(std::move(v)) {
  std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SurfaceHodge>) {
          if (x.degree < 1) throw UsageError("surface provider requires degree l >= 1");
          if (x.genus < 0) throw UsageError("genus must be >= 0");
          if (x.h00 && *x.h00 < 0) throw UsageError("h00 must be >= 0");
          check_table(x.exceptional);
        } else if constexpr (std::is_same_v<T, HrrVanishingHodge>) {
          validate_geometry(x.geometry);
          if (x.k0 < 0) throw UsageError("k0 must be >= 0");
          check_table(x.table);
        } else {
          if (x.m < 1) throw UsageError("dimension must be >= 1");
          check_table(x.table);
          for (const auto& [key, v] : x.table) {
            if (key.first < 0 || key.first > x.m) throw UsageError("table entry with p out of range");
            auto dual = x.table.find({x.m - key.first, -key.second});
            if (dual != x.table.end() && dual->second != v)
              throw UsageError("explicit table violates duality at (" + std::to_string(key.first) + "," +
                               std::to_string(key.second) + ")");
          }
        }
      },
      v_);
}

HodgeProvider HodgeProvider::surface(int genus, long degree, std::optional<long> h00, HodgeTable exceptional) {
  return HodgeProvider(SurfaceHodge{genus, degree, h00, std::move(exceptional)});
}

HodgeProvider HodgeProvider::hrr_vanishing(Geometry g, long k0, HodgeTable table) {
  return HodgeProvider(HrrVanishingHodge{std::move(g), k0, std::move(table)});
}

HodgeProvider HodgeProvider::explicit_table(int m, HodgeTable table) {
  return HodgeProvider(ExplicitHodge{m, std::move(table)});
}

int HodgeProvider::m() const {
  return std::visit(
      [](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SurfaceHodge>) return 1;
        else if constexpr (std::is_same_v<T, HrrVanishingHodge>) return x.geometry.m;
        else return x.m;
      },
      v_);
}

long HodgeProvider::hodge_number(int p, long k) const {
  if (p < 0 || p > m()) throw UsageError("form degree p out of range");
  return std::visit(
      [&](const auto& x) -> long {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SurfaceHodge>) return surface_value(x, p, k);
        else if constexpr (std::is_same_v<T, HrrVanishingHodge>) return hrr_value(x, p, k, 0);
        else {
          if (auto it = x.table.find({x.m - p, -k}); it != x.table.end() && !x.table.count({p, k}))
            return it->second;
          return lookup(x.table, p, k, "not in explicit table");
        }
      },
      v_);
}

std::optional<long> HodgeProvider::try_hodge_number(int p, long k) const {
  try {
    return hodge_number(p, k);
  } catch (const UnknownHodgeData&) {
    return std::nullopt;
  }
}

long hodge_number(const HodgeProvider& hp, int p, long k) { return hp.hodge_number(p, k); }

}  // namespace etaforge
