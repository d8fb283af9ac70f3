#pragma once

#include <vector>

#include "etaforge/cohomology.hpp"
#include "etaforge/hodge.hpp"

namespace etaforge {

struct Crossing {
  Rational parameterValue;
  long k = 0;
  int p = 0;
  long multiplicity = 0;
  int direction = 0;  // sign of the eigenvalue's derivative at the crossing
};

struct FlowResult {
  long net = 0;
  std::vector<Crossing> crossings;
};

/// Crossings of the type-1 families along s in [r0, r1].
/// A family moving down (p even) counts when s* lies in [r0, r1), one moving up
/// (p odd) when s* lies in (r0, r1]; this matches the jumps of the reduced eta.
FlowResult flow_in_s_oracle(const Geometry& g, const HodgeProvider& hp, const Rational& r0, const Rational& r1,
                            const Rational& eps);

/// Four floor/ceiling sums over p > m/2 and p < m/2 split by parity.
long flow_in_delta_closed(const Geometry& g, const HodgeProvider& hp, const Rational& r, const Rational& eps);

/// Brute-force crossings delta* = (r - k)/(p - m/2) of the families
/// (-1)^p (k + delta (p - m/2) - r); increasing families count delta* in (0, eps],
/// decreasing ones delta* in [0, eps). Flat families (p = m/2) never cross.
FlowResult flow_in_delta_oracle(const Geometry& g, const HodgeProvider& hp, const Rational& r, const Rational& eps);

}  // namespace etaforge
