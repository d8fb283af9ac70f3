#include "etaforge/eta.hpp"

#include <sstream>

#include "etaforge/errors.hpp"

namespace etaforge {

std::string ConventionSet::str() const {
  std::ostringstream os;
  os << "signC=" << signC << " flowFactor=" << flowFactor << " transgressionScale=" << transgressionScale
     << " kappa=" << kappa;
  return os.str();
}

namespace {

CohClass effective_c(const Geometry& g, const ConventionSet& conv, const ParamScalar& scale) {
  return CohClass::generator(g.m, ParamScalar(Rational(conv.signC) * g.c1L) * scale);
}

Rational hodge_correction(const Geometry& g, const HodgeProvider& hp, long k) {
  Rational total(0);
  const Rational half_m(g.m, 2);
  for (int p = 0; p <= g.m; ++p) {
    const Rational pp(p);
    const long h = hp.hodge_number(p, k);
    const long s = p % 2 == 0 ? 1 : -1;
    if (pp == half_m) total += Rational(h);
    else if (pp > half_m) total += Rational(s * h);
    else total -= Rational(s * h);
  }
  return total / Rational(2);
}

}  // namespace

ParamScalar adiabatic_limit_piece(const Geometry& g, long k, const ConventionSet& conv) {
  const int D = g.default_order();
  const ParamScalar r = ParamScalar::var("r");
  const ParamScalar a = ParamScalar(Rational(1 + 2 * k)) - ParamScalar(2) * r;
  TruncSeries f = universal_series(UniversalSeries::f_fractional, D).substitute("a", a);
  CohClass fz = apply_series(f, effective_c(g, conv, ParamScalar(Rational(1, 2))));
  CohClass e = class_exp(effective_c(g, conv, r));
  return integrate(g, ahat_class(g) * fz * e);
}

Rational adiabatic_limit(const Geometry& g, const HodgeProvider& hp, const Rational& r, const ConventionSet& conv) {
  if (!r.is_integer()) {
    const long k = r.floor().get_si();
    return adiabatic_limit_piece(g, k, conv).substitute("r", r).constant();
  }
  const long k = r.to_long();
  const int D = g.default_order();
  TruncSeries f = universal_series(UniversalSeries::f_integer, D);
  CohClass fz = apply_series(f, effective_c(g, conv, ParamScalar(Rational(1, 2))));
  CohClass e = class_exp(effective_c(g, conv, ParamScalar(r)));
  return integrate(g, ahat_class(g) * fz * e).constant() + hodge_correction(g, hp, k);
}

ParamScalar transgression_poly(const Geometry& g, const ConventionSet& conv) {
  const int D = g.default_order();
  const TruncSeries p = universal_series(UniversalSeries::p_ahat, D);
  const TruncSeries dp = universal_series(UniversalSeries::p_ahat_deriv, D);
  const ParamScalar dw = ParamScalar::var("delta") * ParamScalar(Rational(conv.signC) * g.c1L);

  CohClass omega0(g.m), omega2(g.m);
  for (const auto& root : g.tangentRoots) {
    CohClass y = CohClass::generator(g.m, ParamScalar(root) + dw);
    omega0 = omega0 + apply_series(p, y).scaled(2);
    omega2 = omega2 + apply_series(dp, y).scaled(2);
  }
  const CohClass y0 = CohClass::generator(g.m, dw);
  const ParamScalar t(Rational(g.virtual_trivial()));
  omega0 = omega0 + apply_series(p, y0).scaled(ParamScalar(2) - ParamScalar(2) * t);
  omega2 = omega2 + apply_series(dp, y0).scaled(ParamScalar(conv.kappa) - ParamScalar(2) * t);

  ParamScalar density = integrate(g, omega2 * class_exp(omega0));
  ParamScalar cyl = density.integrate("delta", ParamScalar(0), ParamScalar::var("eps"));
  const Rational sign = g.m % 2 == 1 ? Rational(1) : Rational(-1);  // (-1)^{m-1}
  return cyl * ParamScalar(conv.transgressionScale * sign);
}

Rational transgression(const Geometry& g, const Rational& eps, const ConventionSet& conv) {
  if (eps.sign() < 0) throw UsageError("eps must be nonnegative");
  return transgression_poly(g, conv).substitute("eps", eps).constant();
}

Rational endpoint_correction(const Geometry& g, const HodgeProvider& hp, const Rational& r) {
  if (!r.is_integer()) return Rational(0);
  const long k = r.to_long();
  const Rational half_m(g.m, 2);
  Rational total(0);
  for (int p = 0; p <= g.m; ++p) {
    const Rational pp(p);
    const bool down = (pp > half_m && p % 2 == 1) || (pp < half_m && p % 2 == 0);
    if (down) total += Rational(hp.hodge_number(p, k));
  }
  return total;
}

EtaValue exact_eta(const Geometry& g, const HodgeProvider& hp, const Rational& r, const Rational& eps,
                   const ConventionSet& conv, const DolbeaultProvider* provider) {
  if (eps.sign() <= 0) throw UsageError("eps must be positive");
  EtaValue out;
  out.conventions = conv;
  if (provider) {
    out.validityFlag = validate_epsilon(eps, *provider);
    if (!out.validityFlag)
      out.caveat = "eps/8 >= M = " + provider->M().str() + ": type-2 eigenvalues may cross zero";
  } else {
    out.caveat = "no Dolbeault lower bound M supplied; eps/8 < M not attested";
  }
  auto& b = out.breakdown;
  b.adiabaticLimit = adiabatic_limit(g, hp, r, conv);
  b.sfClosed = Rational(flow_in_delta_closed(g, hp, r, eps));
  b.endpointCorrection = endpoint_correction(g, hp, r);
  b.flowTerm = b.sfClosed + b.endpointCorrection;
  b.transgressionTerm = transgression(g, eps, conv);
  out.value = b.adiabaticLimit + Rational(conv.flowFactor) * (b.flowTerm + b.transgressionTerm);
  return out;
}

Rational asymptotic_eta(const Geometry& g, const HodgeProvider& /*hp*/, const Rational& r, const Rational& eps,
                        const ConventionSet& conv) {
  if (r.sign() < 0) throw UsageError("asymptotic formula needs r >= 0");
  const CohClass chk = class_exp(CohClass::generator(g.m, ParamScalar(g.c1K))) * todd_class(g);
  const long K = (r + eps * Rational(g.m, 2)).floor().get_si();
  Rational total(0);
  for (int a = 0; a <= g.m; ++a) {
    const Rational weight = g.c1L.pow(a) * chk[g.m - a].constant() * g.topIntegral;
    if (weight.is_zero()) continue;
    Rational bracket = r.pow(a + 1) / factorial(a + 1);
    Rational partial(0);
    for (long k = 1; k <= K; ++k) partial += Rational(k).pow(a);
    bracket -= partial / factorial(a);
    total += bracket * weight;
  }
  return Rational(conv.flowFactor) * total;
}

ApsCheck aps_difference_check(const Geometry& g, const HodgeProvider& hp, const Rational& r0, const Rational& r1,
                              const Rational& eps, const ConventionSet& conv, const DolbeaultProvider* provider) {
  ApsCheck out;
  if (r0 == r1) {
    out.pass = true;
    return out;
  }
  out.lhs = exact_eta(g, hp, r1, eps, conv, provider).value - exact_eta(g, hp, r0, eps, conv, provider).value;
  const Rational lo = r0 < r1 ? r0 : r1, hi = r0 < r1 ? r1 : r0;
  Rational sf(flow_in_s_oracle(g, hp, lo, hi, eps).net);
  Rational rhs = Rational(conv.flowFactor) * (sf + index_integral(g, hi) - index_integral(g, lo));
  out.rhs = r0 < r1 ? rhs : -rhs;
  out.pass = out.lhs == out.rhs;
  return out;
}

std::vector<CalibrationPreset> default_calibration_suite() {
  std::vector<CalibrationPreset> suite;
  for (long l = 1; l <= 3; ++l)
    suite.push_back({surface_preset(0, Rational(l)), HodgeProvider::surface(0, l)});
  suite.push_back({surface_preset(1, Rational(2)), HodgeProvider::surface(1, 2, 0)});
  return suite;
}

namespace {

bool all_h0_vanish(const CalibrationPreset& pr) {
  for (int p = 0; p <= pr.geometry.m; ++p) {
    auto h = pr.hodge.try_hodge_number(p, 0);
    if (!h || *h != 0) return false;
  }
  return true;
}

bool is_genus0_surface(const CalibrationPreset& pr) {
  const auto* s = std::get_if<SurfaceHodge>(&pr.hodge.variant());
  return s && s->genus == 0;
}

bool check_t1(const std::vector<CalibrationPreset>& suite, const ConventionSet& conv) {
  for (const auto& pr : suite) {
    if (!all_h0_vanish(pr)) continue;
    Rational right = adiabatic_limit_piece(pr.geometry, 0, conv).substitute("r", Rational(0)).constant();
    if (right != adiabatic_limit(pr.geometry, pr.hodge, Rational(0), conv)) return false;
  }
  return true;
}

bool check_t2(const std::vector<CalibrationPreset>& suite, const ConventionSet& conv) {
  static const std::vector<std::pair<Rational, Rational>> windows = {
      {Rational(0), Rational(1, 2)},  {Rational(1, 2), Rational(1)},    {Rational(1, 2), Rational(3, 2)},
      {Rational(1), Rational(2)},     {Rational(3, 2), Rational(7, 2)}, {Rational(1, 3), Rational(17, 4)}};
  const Rational eps(1, 10);
  for (const auto& pr : suite) {
    if (!is_genus0_surface(pr)) continue;
    for (const auto& [r0, r1] : windows)
      if (!aps_difference_check(pr.geometry, pr.hodge, r0, r1, eps, conv).pass) return false;
  }
  return true;
}

ParamScalar t3_target(const Geometry& g) {
  Rational chi(0);
  for (const auto& x : g.tangentRoots) chi += x;
  chi *= g.topIntegral;
  const Rational l = g.c1L * g.topIntegral;
  const ParamScalar e = ParamScalar::var("eps");
  return e * e * ParamScalar(l / Rational(12)) - e * ParamScalar(chi / Rational(12));
}

std::string check_t3(const std::vector<CalibrationPreset>& suite, const ConventionSet& conv) {
  for (const auto& pr : suite) {
    if (pr.geometry.m != 1) continue;
    ParamScalar got = transgression_poly(pr.geometry, conv);
    ParamScalar want = t3_target(pr.geometry);
    if (got != want) return pr.geometry.label + ": got " + got.str() + ", expected " + want.str();
  }
  return {};
}

}  // namespace

CalibrationReport calibrate(const std::vector<CalibrationPreset>& suite) {
  bool has_g0 = false;
  for (const auto& pr : suite) has_g0 = has_g0 || is_genus0_surface(pr);
  if (!has_g0) throw UsageError("calibration suite needs a genus-0 surface preset");

  std::vector<Rational> scales;
  for (int j = 0; j <= 2; ++j) {
    for (Rational base : {Rational(2).pow(j), Rational(2).pow(-j)}) {
      scales.push_back(base);
      scales.push_back(-base);
      if (j == 0) break;
    }
  }

  CalibrationReport report;
  std::optional<ConventionSet> best_all, best_t12;
  for (int signC : {-1, 1}) {
    for (int ff : {1, 2}) {
      ConventionSet base;
      base.signC = signC;
      base.flowFactor = ff;
      const bool t12 = check_t1(suite, base) && check_t2(suite, base);
      for (const auto& scale : scales) {
        for (const Rational& kappa : {Rational(2), Rational(1)}) {
          ConventionSet c = base;
          c.transgressionScale = scale;
          c.kappa = kappa;
          ++report.candidatesTested;
          if (!t12) continue;
          ++report.satisfyingT1T2;
          if (!best_t12) best_t12 = c;
          if (check_t3(suite, c).empty()) {
            ++report.satisfyingAll;
            if (!best_all) best_all = c;
          }
        }
      }
    }
  }
  if (!best_t12)
    throw NoConsistentConvention("no candidate convention satisfies continuity (T1) and the APS relation (T2)");
  report.t1 = report.t2 = true;
  if (best_all) {
    report.conventions = *best_all;
    report.t3 = true;
  } else {
    report.conventions = *best_t12;
    report.t3Deviation = check_t3(suite, report.conventions);
  }
  return report;
}

const ConventionSet& default_conventions() {
  static const ConventionSet conv = calibrate(default_calibration_suite()).conventions;
  return conv;
}

}  // namespace etaforge
