#pragma once

#include <functional>
#include <vector>

namespace etaforge {

/// Model data at a point y: odd ambient dimension n and the positive eigenvalues of A_y.
struct ModelPoint {
  int n = 1;
  std::vector<double> lambdas;

  /// 2 n_y + 1 = n - 2 m_y
  int n_y() const;
  void validate() const;
};

using TestFunction = std::function<double(double)>;

/// prod(lambda) / ((4 pi)^{n/2} Gamma(n_y + 1/2)) * sum_k 2^{Z(k)} int phi(s) (s - 2k.lambda)^{n_y - 1/2} ds,
/// over lattice points 2k.lambda <= sMax and s in [2k.lambda, sMax].
/// `breakpoints` lists s values where phi is not smooth; quadrature splits there.
double limit_measure_apply(const ModelPoint& pt, const TestFunction& phi, double sMax,
                           const std::vector<double>& breakpoints = {});

/// (4 pi t)^{-n/2} prod(t lambda / tanh(t lambda))
double heat_density(const ModelPoint& pt, double t);

/// Smallest sMax whose tail bound exp(-t sMax/2) heat_density(t/2) is below relTol * heat_density(t).
double tail_cutoff(const ModelPoint& pt, double t, double relTol = 1e-12);

struct LaplaceCheck {
  double measured = 0;
  double target = 0;
  double relError = 0;
  double tailBound = 0;
  double sMax = 0;
};

/// sMax <= 0 selects tail_cutoff(pt, t).
LaplaceCheck laplace_check(const ModelPoint& pt, double t, double sMax = 0);

struct NearZero {
  double value = 0;
  double ratio = 0;
};

/// Mass of the bump psi(s/epsSupport), psi = 1 on [0,1/2] and cos^2(pi(x-1/2)) on [1/2,1].
NearZero near_zero_bound(const ModelPoint& pt, double epsSupport);

}  // namespace etaforge
