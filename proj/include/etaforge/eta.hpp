#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etaforge/cohomology.hpp"
#include "etaforge/flow.hpp"
#include "etaforge/hodge.hpp"
#include "etaforge/spectrum.hpp"

namespace etaforge {

/// Normalization knobs of the eta assembly, frozen by calibrate().
struct ConventionSet {
  int signC = -1;                    // c_eff = signC * c1(L)
  int flowFactor = 1;                // multiplies (flow + transgression)
  Rational transgressionScale{1};    // overall rational constant on the cylinder integral
  Rational kappa{2};                 // factor on the scalar p'(delta w) term of Omega_2

  friend bool operator==(const ConventionSet&, const ConventionSet&) = default;
  std::string str() const;
};

struct EtaBreakdown {
  Rational adiabaticLimit;
  Rational flowTerm;            // sfClosed + endpointCorrection
  Rational sfClosed;
  Rational endpointCorrection;  // kernel already carried by the adiabatic limit at integer r
  Rational transgressionTerm;
};

struct EtaValue {
  Rational value;
  EtaBreakdown breakdown;
  ConventionSet conventions;
  bool validityFlag = false;
  std::string caveat;
};

/// Value on an open interval (k, k+1) as a polynomial in the parameter "r".
ParamScalar adiabatic_limit_piece(const Geometry& g, long k, const ConventionSet& conv);

Rational adiabatic_limit(const Geometry& g, const HodgeProvider& hp, const Rational& r, const ConventionSet& conv);

/// Cylinder integral as a polynomial in the parameter "eps".
ParamScalar transgression_poly(const Geometry& g, const ConventionSet& conv);
Rational transgression(const Geometry& g, const Rational& eps, const ConventionSet& conv);

/// Sum of h^{p,r} over the families moving down (p > m/2 odd, p < m/2 even) when r is an integer.
Rational endpoint_correction(const Geometry& g, const HodgeProvider& hp, const Rational& r);

/// The provider only supplies the epsilon bound M; with none the result is flagged unattested.
EtaValue exact_eta(const Geometry& g, const HodgeProvider& hp, const Rational& r, const Rational& eps,
                   const ConventionSet& conv, const DolbeaultProvider* provider = nullptr);

Rational asymptotic_eta(const Geometry& g, const HodgeProvider& hp, const Rational& r, const Rational& eps,
                        const ConventionSet& conv);

struct ApsCheck {
  Rational lhs;
  Rational rhs;
  bool pass = false;
};

ApsCheck aps_difference_check(const Geometry& g, const HodgeProvider& hp, const Rational& r0, const Rational& r1,
                              const Rational& eps, const ConventionSet& conv,
                              const DolbeaultProvider* provider = nullptr);

struct CalibrationPreset {
  Geometry geometry;
  HodgeProvider hodge;
};

struct CalibrationReport {
  ConventionSet conventions;
  bool t1 = false;
  bool t2 = false;
  bool t3 = false;
  int candidatesTested = 0;
  int satisfyingT1T2 = 0;
  int satisfyingAll = 0;
  std::string t3Deviation;  // empty when T3 holds
};

/// Genus-0 surfaces of degree 1..3, plus a genus-1 surface for T3.
std::vector<CalibrationPreset> default_calibration_suite();

/// Searches signC, flowFactor, transgressionScale and kappa over a finite grid.
/// T1: continuity of the adiabatic limit at r = 0 where all h^{p,0} vanish.
/// T2: aps_difference_check on genus-0 windows.
/// T3: transgression of m = 1 presets equals eps^2 l/12 - eps chi/12.
/// Throws NoConsistentConvention when no candidate meets T1 and T2.
CalibrationReport calibrate(const std::vector<CalibrationPreset>& suite);

const ConventionSet& default_conventions();

}  // namespace etaforge
