#include <doctest.h>

#include <random>

#include "etaforge/errors.hpp"
#include "etaforge/series.hpp"

using namespace etaforge;

namespace {

constexpr int kOrder = 8;

// 1 / (sum d_n x^n) by the schoolbook recurrence, d_0 != 0.
std::vector<Rational> long_division(const std::vector<Rational>& num, const std::vector<Rational>& den, int D) {
  std::vector<Rational> q(D + 1, Rational(0));
  for (int n = 0; n <= D; ++n) {
    Rational acc = n < static_cast<int>(num.size()) ? num[n] : Rational(0);
    for (int j = 1; j <= n && j < static_cast<int>(den.size()); ++j) acc -= den[j] * q[n - j];
    q[n] = acc / den[0];
  }
  return q;
}

ParamScalar bernoulli_poly(long n, const ParamScalar& x) {
  ParamScalar out;
  for (long j = 0; j <= n; ++j) out += ParamScalar(binomial(n, j) * bernoulli(j)) * x.pow(static_cast<int>(n - j));
  return out;
}

}  // namespace

TEST_CASE("todd matches long division of (1 - e^{-x})/x") {
  std::vector<Rational> den;
  for (int n = 0; n <= kOrder; ++n) den.push_back(Rational(n % 2 == 0 ? 1 : -1) / factorial(n + 1));
  auto q = long_division({Rational(1)}, den, kOrder);
  auto td = universal_series(UniversalSeries::todd, kOrder);
  REQUIRE(td.order() == kOrder);
  for (int n = 0; n <= kOrder; ++n) {
    CHECK(td[n] == ParamScalar(q[n]));
    // and the Bernoulli closed form (-1)^n B_n / n!
    CHECK(td[n] == ParamScalar(Rational(n % 2 == 0 ? 1 : -1) * bernoulli(n) / factorial(n)));
  }
}

TEST_CASE("p_ahat and its derivative against Bernoulli numbers") {
  auto p = universal_series(UniversalSeries::p_ahat, kOrder);
  auto dp = universal_series(UniversalSeries::p_ahat_deriv, kOrder);
  CHECK(p[0].is_zero());
  CHECK(p[2] == ParamScalar(Rational(-1, 48)));
  for (int n = 1; n <= kOrder; ++n) {
    Rational want(0);
    if (n % 2 == 0) want = Rational(-1, 2) * bernoulli(n) / (Rational(n) * factorial(n));
    CHECK(p[n] == ParamScalar(want));
  }
  for (int n = 0; n <= kOrder; ++n) {
    Rational want(0);
    if ((n + 1) % 2 == 0) want = Rational(-1, 2) * bernoulli(n + 1) / factorial(n + 1);
    CHECK(dp[n] == ParamScalar(want));
  }
}

TEST_CASE("f_integer equals half of coth z - 1/z") {
  auto f = universal_series(UniversalSeries::f_integer, kOrder);
  for (int j = 0; j <= kOrder; ++j) {
    Rational want(0);
    if (j % 2 == 1) want = Rational(1, 2) * Rational(2).pow(j + 1) * bernoulli(j + 1) / factorial(j + 1);
    CHECK(f[j] == ParamScalar(want));
  }
  CHECK(f[1] == ParamScalar(Rational(1, 6)));
}

TEST_CASE("f_fractional against Bernoulli polynomials") {
  auto f = universal_series(UniversalSeries::f_fractional, kOrder);
  const ParamScalar x = (ParamScalar::var("a") + ParamScalar(1)) * ParamScalar(Rational(1, 2));
  for (int j = 0; j <= kOrder; ++j) {
    ParamScalar want = bernoulli_poly(j + 1, x) * ParamScalar(Rational(2).pow(j) / factorial(j + 1));
    CHECK(f[j] == want);
  }
  CHECK(f[0] == ParamScalar::var("a") * ParamScalar(Rational(1, 2)));
}

TEST_CASE("f_fractional at a = 1 exceeds f_integer by exactly 1/2") {
  auto ff = universal_series(UniversalSeries::f_fractional, kOrder).substitute("a", ParamScalar(1));
  auto fi = universal_series(UniversalSeries::f_integer, kOrder);
  auto diff = ff - fi.with_params(ff.params());
  CHECK(diff[0] == ParamScalar(Rational(1, 2)));
  for (int j = 1; j <= kOrder; ++j) CHECK(diff[j].is_zero());
}

TEST_CASE("f_fractional is periodic in r through a = 1 - 2{r}") {
  auto f = universal_series(UniversalSeries::f_fractional, kOrder);
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-400, 400), den(2, 37);
  for (int trial = 0; trial < 50; ++trial) {
    Rational r(num(rng), den(rng));
    if (r.is_integer()) continue;
    auto a_of = [](const Rational& s) { return Rational(1) - Rational(2) * s.frac(); };
    CHECK(f.substitute("a", ParamScalar(a_of(r))) == f.substitute("a", ParamScalar(a_of(r + Rational(1)))));
    CHECK(f.substitute("a", ParamScalar(a_of(r))) == f.substitute("a", ParamScalar(a_of(r - Rational(3)))));
  }
}

TEST_CASE("exp and log are mutually inverse") {
  auto x = TruncSeries::variable(kOrder);
  auto s = x + x * x.scaled(ParamScalar(Rational(1, 3))) - x * x * x;
  auto e = series_exp(s);
  CHECK(e[0] == ParamScalar(1));
  CHECK(series_log(e) == s);
  // exp(x) coefficients are 1/n!
  auto ex = series_exp(x);
  for (int n = 0; n <= kOrder; ++n) CHECK(ex[n] == ParamScalar(Rational(1) / factorial(n)));
}

TEST_CASE("exp with parameters: exp(a x) exp(b x) = exp((a+b) x)") {
  std::set<std::string> ps{"a", "b"};
  auto x = TruncSeries::variable(6, ps);
  auto ea = series_exp(x.scaled(ParamScalar::var("a")));
  auto eb = series_exp(x.scaled(ParamScalar::var("b")));
  auto eab = series_exp(x.scaled(ParamScalar::var("a") + ParamScalar::var("b")));
  CHECK(ea * eb == eab);
}

TEST_CASE("preconditions raise domain errors") {
  auto x = TruncSeries::variable(4);
  CHECK_THROWS_AS(series_exp(x + TruncSeries::constant(4, ParamScalar(1))), DomainError);
  CHECK_THROWS_AS(series_log(x), DomainError);
  CHECK_THROWS_AS(series_div(TruncSeries::constant(4, ParamScalar(1)), x, 1), DomainError);
  CHECK_THROWS_AS(x + TruncSeries::variable(5), UsageError);
  CHECK_THROWS(parse_universal_series("bogus"));
  CHECK(parse_universal_series("f_fractional") == UniversalSeries::f_fractional);
}

TEST_CASE("regularized division drops the common factor") {
  auto x = TruncSeries::variable(6);
  auto num = x * x;                 // x^2
  auto den = x + x * x;             // x (1 + x)
  auto q = series_div(num, den, 1);  // x / (1 + x)
  CHECK(q.order() == 5);
  for (int n = 1; n <= 5; ++n) CHECK(q[n] == ParamScalar(n % 2 == 1 ? 1 : -1));
}

TEST_CASE("ParamScalar calculus") {
  auto e = ParamScalar::var("eps");
  auto poly = e * e * ParamScalar(3) + e * ParamScalar(Rational(1, 2)) + ParamScalar(7);
  CHECK(poly.degree_in("eps") == 2);
  CHECK(poly.derivative("eps") == e * ParamScalar(6) + ParamScalar(Rational(1, 2)));
  CHECK(poly.integrate("eps", ParamScalar(0), ParamScalar(1)).constant() == Rational(1) + Rational(1, 4) + 7);
  CHECK(poly.evaluate({{"eps", Rational(2)}}) == Rational(20));
  CHECK_THROWS_AS(poly.constant(), UsageError);
  CHECK((poly - poly).is_zero());
}

TEST_CASE("Rational parsing and rounding") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("x"), UsageError);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(-7, 2).frac() == Rational(1, 2));
  CHECK(Rational(5, 10).str() == "1/2");
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(12) == Rational(-691, 2730));
}
