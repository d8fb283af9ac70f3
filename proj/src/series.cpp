#include "etaforge/series.hpp"

#include "etaforge/errors.hpp"

namespace etaforge {

namespace {

void require_compatible(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order())
    throw UsageError("series orders differ: " + std::to_string(a.order()) + " vs " + std::to_string(b.order()));
  if (a.params() != b.params()) throw UsageError("series parameter sets differ");
}

std::set<std::string> merged(std::set<std::string> a, const std::set<std::string>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

}  // namespace

TruncSeries::TruncSeries(int order, std::set<std::string> params)
    : order_(order), coeffs_(order < 0 ? 0 : order + 1), params_(std::move(params)) {
  if (order < 0) throw UsageError("negative series order");
}

TruncSeries::TruncSeries(int order, std::vector<ParamScalar> coeffs, std::set<std::string> params)
    : TruncSeries(order, std::move(params)) {
  for (size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= order; ++i) coeffs_[i] = coeffs[i];
  for (const auto& c : coeffs_) params_ = merged(params_, c.params());
}

TruncSeries TruncSeries::constant(int order, const ParamScalar& c, std::set<std::string> params) {
  TruncSeries s(order, std::move(params));
  s.coeffs_[0] = c;
  s.params_ = merged(s.params_, c.params());
  return s;
}

TruncSeries TruncSeries::variable(int order, std::set<std::string> params) {
  TruncSeries s(order, std::move(params));
  if (order >= 1) s.coeffs_[1] = ParamScalar(1);
  return s;
}

TruncSeries TruncSeries::with_params(const std::set<std::string>& extra) const {
  TruncSeries s = *this;
  s.params_ = merged(s.params_, extra);
  return s;
}

TruncSeries TruncSeries::truncate(int order) const {
  TruncSeries s(order, params_);
  for (int i = 0; i <= std::min(order, order_); ++i) s.coeffs_[i] = coeffs_[i];
  return s;
}

TruncSeries TruncSeries::derivative() const {
  TruncSeries s(order_, params_);
  for (int i = 0; i < order_; ++i) s.coeffs_[i] = coeffs_[i + 1] * ParamScalar(Rational(i + 1));
  return s;
}

TruncSeries TruncSeries::rescale(const ParamScalar& c) const {
  TruncSeries s(order_, merged(params_, c.params()));
  ParamScalar power(1);
  for (int i = 0; i <= order_; ++i) {
    s.coeffs_[i] = coeffs_[i] * power;
    power *= c;
  }
  return s;
}

TruncSeries TruncSeries::substitute(const std::string& name, const ParamScalar& value) const {
  std::set<std::string> p = params_;
  p.erase(name);
  TruncSeries s(order_, merged(p, value.params()));
  for (int i = 0; i <= order_; ++i) s.coeffs_[i] = coeffs_[i].substitute(name, value);
  return s;
}

TruncSeries TruncSeries::scaled(const ParamScalar& c) const {
  TruncSeries s(order_, merged(params_, c.params()));
  for (int i = 0; i <= order_; ++i) s.coeffs_[i] = coeffs_[i] * c;
  return s;
}

TruncSeries TruncSeries::operator-() const { return scaled(ParamScalar(-1)); }

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  require_compatible(a, b);
  TruncSeries s = a;
  for (int i = 0; i <= a.order_; ++i) s.coeffs_[i] += b.coeffs_[i];
  return s;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  require_compatible(a, b);
  TruncSeries s(a.order_, a.params_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order_; ++j) s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return s;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

TruncSeries series_arith(const TruncSeries& lhs, const TruncSeries& rhs, SeriesOp kind) {
  return kind == SeriesOp::add ? lhs + rhs : lhs * rhs;
}

TruncSeries series_exp(const TruncSeries& s) {
  if (!s[0].is_zero()) throw DomainError("series_exp needs a vanishing constant term");
  const int D = s.order();
  std::vector<ParamScalar> e(D + 1);
  e[0] = ParamScalar(1);
  // n e_n = sum_k k s_k e_{n-k}
  for (int n = 1; n <= D; ++n) {
    ParamScalar acc;
    for (int k = 1; k <= n; ++k)
      if (!s[k].is_zero()) acc += ParamScalar(Rational(k)) * s[k] * e[n - k];
    e[n] = acc * ParamScalar(Rational(1, n));
  }
  return TruncSeries(D, std::move(e), s.params());
}

TruncSeries series_log(const TruncSeries& s) {
  if (s[0] != ParamScalar(1)) throw DomainError("series_log needs constant term 1");
  const int D = s.order();
  std::vector<ParamScalar> l(D + 1);
  // n s_n = sum_k k l_k s_{n-k}
  for (int n = 1; n <= D; ++n) {
    ParamScalar acc;
    for (int k = 1; k < n; ++k) acc += ParamScalar(Rational(k)) * l[k] * s[n - k];
    l[n] = s[n] - acc * ParamScalar(Rational(1, n));
  }
  return TruncSeries(D, std::move(l), s.params());
}

TruncSeries series_div(const TruncSeries& num, const TruncSeries& den, int common_factor) {
  require_compatible(num, den);
  const int j = common_factor;
  if (j < 0 || j > num.order()) throw UsageError("invalid common factor degree");
  for (int i = 0; i < j; ++i)
    if (!num[i].is_zero() || !den[i].is_zero())
      throw DomainError("declared factor x^" + std::to_string(j) + " does not divide both series");
  const ParamScalar& lead = den[j];
  if (!lead.is_constant() || lead.is_zero())
    throw DomainError("denominator has no invertible constant term");
  const Rational inv = lead.constant().inverse();
  const int D = num.order() - j;
  std::vector<ParamScalar> q(D + 1);
  for (int n = 0; n <= D; ++n) {
    ParamScalar acc = num[n + j];
    for (int k = 1; k <= n; ++k)
      if (!den[k + j].is_zero()) acc -= den[k + j] * q[n - k];
    q[n] = acc * ParamScalar(inv);
  }
  return TruncSeries(D, std::move(q), num.params());
}

namespace {

// sinh z, cosh z, e^{cz} at the given order
TruncSeries sinh_series(int D) {
  TruncSeries s(D);
  for (int n = 1; n <= D; n += 2) s[n] = ParamScalar(factorial(n).inverse());
  return s;
}

TruncSeries cosh_series(int D) {
  TruncSeries s(D);
  for (int n = 0; n <= D; n += 2) s[n] = ParamScalar(factorial(n).inverse());
  return s;
}

TruncSeries exp_series(int D, const ParamScalar& c) {
  TruncSeries s(D, c.params());
  ParamScalar power(1);
  for (int n = 0; n <= D; ++n) {
    s[n] = power * ParamScalar(factorial(n).inverse());
    power *= c;
  }
  return s;
}

TruncSeries p_ahat_series(int D) {
  // g = sinh(z/2)/(z/2) = sum (z/2)^{2n}/(2n+1)!
  TruncSeries g(D);
  for (int n = 0; 2 * n <= D; ++n) g[2 * n] = ParamScalar(Rational(1, 4).pow(n) / factorial(2 * n + 1));
  return series_log(g).scaled(ParamScalar(Rational(-1, 2)));
}

}  // namespace

TruncSeries universal_series(UniversalSeries name, int order) {
  if (order < 1) throw UsageError("universal series need order >= 1");
  const int D = order;
  switch (name) {
    case UniversalSeries::todd: {
      TruncSeries x = TruncSeries::variable(D + 1);
      TruncSeries den = TruncSeries::constant(D + 1, 1) - exp_series(D + 1, ParamScalar(-1));
      return series_div(x, den, 1);
    }
    case UniversalSeries::p_ahat:
      return p_ahat_series(D);
    case UniversalSeries::p_ahat_deriv:
      return p_ahat_series(D + 1).derivative().truncate(D);
    case UniversalSeries::f_integer: {
      TruncSeries z = TruncSeries::variable(D + 2);
      TruncSeries num = z * cosh_series(D + 2) - sinh_series(D + 2);
      TruncSeries den = z * sinh_series(D + 2);
      return series_div(num, den, 2).scaled(ParamScalar(Rational(1, 2)));
    }
    case UniversalSeries::f_fractional: {
      const std::set<std::string> a{"a"};
      TruncSeries z = TruncSeries::variable(D + 2, a);
      TruncSeries num = z * exp_series(D + 2, ParamScalar::var("a")) - sinh_series(D + 2).with_params(a);
      TruncSeries den = z * sinh_series(D + 2).with_params(a);
      return series_div(num, den, 2).scaled(ParamScalar(Rational(1, 2)));
    }
  }
  throw UsageError("unknown universal series");
}

UniversalSeries parse_universal_series(const std::string& name) {
  if (name == "todd") return UniversalSeries::todd;
  if (name == "p_ahat") return UniversalSeries::p_ahat;
  if (name == "p_ahat_deriv") return UniversalSeries::p_ahat_deriv;
  if (name == "f_integer") return UniversalSeries::f_integer;
  if (name == "f_fractional") return UniversalSeries::f_fractional;
  throw UsageError("unknown universal series '" + name + "'");
}

}  // namespace etaforge
