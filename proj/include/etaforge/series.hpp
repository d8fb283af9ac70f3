#pragma once

#include <set>
#include <string>
#include <vector>

#include "etaforge/param_scalar.hpp"

namespace etaforge {

/// Univariate power series c_0 + c_1 x + ... + c_D x^D with ParamScalar coefficients.
/// Terms of degree above D are discarded by every operation.
class TruncSeries {
 public:
  TruncSeries(int order, std::set<std::string> params = {});
  TruncSeries(int order, std::vector<ParamScalar> coeffs, std::set<std::string> params = {});

  static TruncSeries constant(int order, const ParamScalar& c, std::set<std::string> params = {});
  /// The series x.
  static TruncSeries variable(int order, std::set<std::string> params = {});

  int order() const { return order_; }
  const std::set<std::string>& params() const { return params_; }
  const ParamScalar& operator[](int n) const { return coeffs_.at(n); }
  ParamScalar& operator[](int n) { return coeffs_.at(n); }
  const std::vector<ParamScalar>& coefficients() const { return coeffs_; }

  /// Copy with extra declared parameters.
  TruncSeries with_params(const std::set<std::string>& extra) const;
  /// Copy reduced (or zero-extended) to another order.
  TruncSeries truncate(int order) const;

  TruncSeries derivative() const;
  /// f(x) -> f(c x); c may carry parameters.
  TruncSeries rescale(const ParamScalar& c) const;
  TruncSeries substitute(const std::string& name, const ParamScalar& value) const;
  TruncSeries scaled(const ParamScalar& c) const;

  TruncSeries operator-() const;
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

 private:
  int order_;
  std::vector<ParamScalar> coeffs_;
  std::set<std::string> params_;
};

enum class SeriesOp { add, mul };

TruncSeries series_arith(const TruncSeries& lhs, const TruncSeries& rhs, SeriesOp kind);

/// Requires c_0 = 0.
TruncSeries series_exp(const TruncSeries& s);
/// Requires c_0 = 1.
TruncSeries series_log(const TruncSeries& s);

/// Quotient num/den. With `common_factor` j > 0 both series must vanish below x^j;
/// the factor is cancelled and the result has order D - j.
TruncSeries series_div(const TruncSeries& num, const TruncSeries& den, int common_factor = 0);

enum class UniversalSeries { todd, p_ahat, p_ahat_deriv, f_integer, f_fractional };

/// Named characteristic series, all regular at 0:
///   todd         x/(1-e^{-x})
///   p_ahat       (1/2) log((z/2)/sinh(z/2))
///   p_ahat_deriv d/dz of p_ahat
///   f_integer    (1/2)(coth z - 1/z)
///   f_fractional (1/2)(e^{az}/sinh z - 1/z), formal parameter "a"
TruncSeries universal_series(UniversalSeries name, int order);

UniversalSeries parse_universal_series(const std::string& name);

}  // namespace etaforge
