#include "etaforge/measure.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "etaforge/errors.hpp"

namespace etaforge {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

// Visit k in N^{m} with 2 k.lambda <= sMax; z counts the nonzero components.
template <class F>
void for_each_lattice(const std::vector<double>& lambdas, size_t i, double c, int z, double sMax, F& visit) {
  if (i == lambdas.size()) {
    visit(c, z);
    return;
  }
  for (long k = 0; c + 2.0 * static_cast<double>(k) * lambdas[i] <= sMax; ++k)
    for_each_lattice(lambdas, i + 1, c + 2.0 * static_cast<double>(k) * lambdas[i], z + (k != 0), sMax, visit);
}

}  // namespace

int ModelPoint::n_y() const { return (n - 1 - 2 * static_cast<int>(lambdas.size())) / 2; }

void ModelPoint::validate() const {
  if (n < 1 || n % 2 == 0) throw UsageError("ambient dimension n must be an odd positive integer");
  if (n - 1 - 2 * static_cast<int>(lambdas.size()) < 0) throw UsageError("too many eigenvalues for dimension n");
  for (double l : lambdas)
    if (!(l > 0) || !std::isfinite(l)) throw UsageError("eigenvalues of A_y must be positive");
}

double limit_measure_apply(const ModelPoint& pt, const TestFunction& phi, double sMax,
                           const std::vector<double>& breakpoints) {
  pt.validate();
  if (!(sMax >= 0)) throw UsageError("sMax must be nonnegative");
  const int ny = pt.n_y();
  double pref = 1.0 / (std::pow(4.0 * kPi, pt.n / 2.0) * boost::math::tgamma(ny + 0.5));
  for (double l : pt.lambdas) pref *= l;

  double total = 0;
  auto visit = [&](double c, int z) {
    const double U = std::sqrt(sMax - c);
    if (U == 0) return;
    // s = c + u^2 removes the (s - c)^{n_y - 1/2} endpoint singularity
    auto integrand = [&](double u) { return 2.0 * phi(c + u * u) * std::pow(u, 2 * ny); };
    std::vector<double> cuts{0.0};
    for (double b : breakpoints)
      if (b > c && b < sMax) cuts.push_back(std::sqrt(b - c));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(U);
    double v = 0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      double err = 0, l1 = 0;
      const double piece = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
          integrand, cuts[i], cuts[i + 1], 20, 1e-12, &err, &l1);
      if (!std::isfinite(piece) || err > 1e-9 * std::max(1.0, l1)) {
        std::ostringstream os;
        os << "quadrature did not converge on [" << cuts[i] << "," << cuts[i + 1] << "] at lattice offset " << c
           << ": error estimate " << err << ", L1 " << l1;
        throw NumericalError(os.str());
      }
      v += piece;
    }
    total += std::ldexp(v, z);
  };
  for_each_lattice(pt.lambdas, 0, 0.0, 0, sMax, visit);
  return pref * total;
}

double heat_density(const ModelPoint& pt, double t) {
  pt.validate();
  if (!(t > 0)) throw UsageError("t must be positive");
  double v = std::pow(4.0 * kPi * t, -pt.n / 2.0);
  for (double l : pt.lambdas) v *= t * l / std::tanh(t * l);
  return v;
}

double tail_cutoff(const ModelPoint& pt, double t, double relTol) {
  const double ratio = heat_density(pt, t / 2) / (relTol * heat_density(pt, t));
  return std::max(0.0, 2.0 / t * std::log(ratio));
}

LaplaceCheck laplace_check(const ModelPoint& pt, double t, double sMax) {
  LaplaceCheck out;
  out.sMax = sMax > 0 ? sMax : tail_cutoff(pt, t);
  out.measured = limit_measure_apply(pt, [t](double s) { return std::exp(-t * s); }, out.sMax);
  out.target = heat_density(pt, t);
  out.relError = std::abs(out.measured - out.target) / out.target;
  out.tailBound = std::exp(-t * out.sMax / 2) * heat_density(pt, t / 2);
  return out;
}

NearZero near_zero_bound(const ModelPoint& pt, double epsSupport) {
  if (!(epsSupport > 0 && epsSupport < 1)) throw UsageError("epsSupport must lie in (0,1)");
  auto bump = [epsSupport](double s) {
    const double x = s / epsSupport;
    if (x < 0 || x > 1) return 0.0;
    if (x <= 0.5) return 1.0;
    const double c = std::cos(kPi * (x - 0.5));
    return c * c;
  };
  NearZero out;
  out.value = limit_measure_apply(pt, bump, epsSupport, {epsSupport / 2});
  out.ratio = out.value / std::sqrt(epsSupport);
  return out;
}

}  // namespace etaforge
