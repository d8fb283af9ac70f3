#include <doctest.h>

#include <cmath>
#include <random>

#include "etaforge/errors.hpp"
#include "etaforge/spectrum.hpp"

using namespace etaforge;

namespace {

// Jacobi rotation on a symmetric 2x2 matrix; returns (larger, smaller).
std::pair<long double, long double> jacobi2(long double a, long double b, long double c) {
  if (c == 0) return {std::max(a, b), std::min(a, b)};
  long double theta = (b - a) / (2 * c);
  long double t = (theta >= 0 ? 1 : -1) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
  long double x = a - t * c, y = b + t * c;
  return {std::max(x, y), std::min(x, y)};
}

int sign_mpf(const Rational& a, const Rational& b, const Rational& d) {
  mpf_class x(a.raw(), 512), y(b.raw(), 512), z(d.raw(), 512);
  mpf_class v = x + y * sqrt(z);
  return sgn(v);
}

}  // namespace

TEST_CASE("surd sign agrees with a 512-bit evaluation") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> n(-60, 60), dd(1, 25), rad(0, 200);
  for (int i = 0; i < 3000; ++i) {
    Rational a(n(rng), dd(rng)), b(n(rng), dd(rng)), d(rad(rng), dd(rng));
    QuadSurd s(a, b, d);
    CHECK(s.sign() == sign_mpf(a, b, d));
    CHECK(std::fabs(s.to_double() - (a.to_double() + b.to_double() * std::sqrt(d.to_double()))) < 1e-9);
  }
  // near-cancellation: 99 - 70 sqrt 2 > 0, 577 - 408 sqrt 2 > 0, 408 sqrt 2 - 577 < 0
  CHECK(QuadSurd(Rational(99), Rational(-70), Rational(2)).sign() == 1);
  CHECK(QuadSurd(Rational(-577), Rational(408), Rational(2)).sign() == -1);
  CHECK(QuadSurd(Rational(3), Rational(-1), Rational(9)).sign() == 0);
}

TEST_CASE("two-radicand signs agree with a 512-bit evaluation") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> n(-40, 40), dd(1, 9), rad(0, 60);
  for (int i = 0; i < 3000; ++i) {
    Rational al(n(rng), dd(rng)), be(n(rng), dd(rng)), ga(n(rng), dd(rng));
    Rational d1(rad(rng)), d2(rad(rng), dd(rng));
    mpf_class v = mpf_class(al.raw(), 512) + mpf_class(be.raw(), 512) * sqrt(mpf_class(d1.raw(), 512)) +
                  mpf_class(ga.raw(), 512) * sqrt(mpf_class(d2.raw(), 512));
    CHECK(sign_of_two_surds(al, be, d1, ga, d2) == sgn(v));
  }
  CHECK(sign_of_two_surds(Rational(0), Rational(1), Rational(2), Rational(-1), Rational(8, 4)) == 0);
}

TEST_CASE("surd normalization") {
  QuadSurd s(Rational(1), Rational(1), Rational(12));
  CHECK(s.d() == Rational(3));
  CHECK(s.b() == Rational(2));
  QuadSurd q(Rational(1), Rational(1), Rational(9, 4));
  CHECK(q.is_rational());
  CHECK(q.a() == Rational(5, 2));
  CHECK(QuadSurd::compare(QuadSurd(Rational(0), Rational(1), Rational(2)), QuadSurd(Rational(7, 5))) == 1);
  CHECK_THROWS_AS(QuadSurd(Rational(0), Rational(1), Rational(-2)), DomainError);
}

TEST_CASE("type-2 pair against a dense 2x2 eigensolver") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> kd(-20, 20), pd(0, 2), num(1, 400), den(1, 60);
  for (int i = 0; i < 4000; ++i) {
    const int m = 3;
    long k = kd(rng);
    int p = static_cast<int>(pd(rng));
    Rational muSq(num(rng), den(rng)), r(num(rng) - 200, den(rng)), eps(num(rng), 400);
    auto [plus, minus] = type2_eigenvalues(k, p, muSq, r, eps, m);
    const long double sg = p % 2 == 0 ? 1 : -1;
    const long double A = sg * (k + eps.to_double() * (p - m / 2.0L) - r.to_double());
    const long double B = -sg * (k + eps.to_double() * (p + 1 - m / 2.0L) - r.to_double());
    const long double C = std::sqrt(static_cast<long double>(muSq.to_double()) * eps.to_double());
    auto [hi, lo] = jacobi2(A, B, C);
    const double scale = std::max(1.0, static_cast<double>(std::fabs(hi) + std::fabs(lo)));
    CHECK(std::fabs(plus.to_double() - static_cast<double>(hi)) < 1e-12 * scale);
    CHECK(std::fabs(minus.to_double() - static_cast<double>(lo)) < 1e-12 * scale);

    // exact trace and determinant
    Rational Ae = (p % 2 == 0 ? 1 : -1) * (Rational(k) + eps * (Rational(p) - Rational(m, 2)) - r);
    Rational Be = (p % 2 == 0 ? -1 : 1) * (Rational(k) + eps * (Rational(p + 1) - Rational(m, 2)) - r);
    QuadSurd tr = plus + minus, det = plus * minus;
    CHECK(tr.is_rational());
    CHECK(tr.a() == Ae + Be);
    CHECK(det.is_rational());
    CHECK(det.a() == Ae * Be - muSq * eps);
    Rational lin = Rational(2 * k) + eps * Rational(2 * p - m + 1) - Rational(2) * r;
    CHECK(det.a() == (eps * eps - lin * lin - Rational(4) * muSq * eps) / Rational(4));
    CHECK(plus.sign() * minus.sign() <= 0);  // det < 0 for mu^2 eps > 0
  }
}

TEST_CASE("type-1 eigenvalues and kernel on the sphere") {
  auto g = surface_preset(0, Rational(1));
  auto hp = HodgeProvider::surface(0, 1);
  auto recs = type1_eigenvalues(g, hp, Rational(0), Rational(1, 10), {-2, 2});
  // h^{0,k} = k for k > 0, h^{1,k} = -k for k < 0
  REQUIRE(recs.size() == 4);
  for (const auto& rec : recs) {
    CHECK(rec.multiplicity == std::abs(rec.k));
    Rational expect = rec.p == 0 ? Rational(rec.k) - Rational(1, 20) : -(Rational(rec.k) + Rational(1, 20));
    CHECK(rec.value == QuadSurd(expect));
  }
  CHECK(kernel_dimension(g, hp, Rational(0), Rational(1, 10)) == 0);
  // r = 2 - eps/2: the p = 0, k = 2 family sits at zero
  CHECK(kernel_dimension(g, hp, Rational(2) - Rational(1, 20), Rational(1, 10)) == 2);
}

TEST_CASE("dolbeault data validation") {
  CHECK_THROWS_AS(DolbeaultProvider({}, Rational(0)), InvalidDolbeaultData);
  CHECK_THROWS_AS(DolbeaultProvider({{0, 0, Rational(-1), 1}}, Rational(1, 10)), InvalidDolbeaultData);
  CHECK_THROWS_AS(DolbeaultProvider({{0, 0, Rational(1, 10), 1}}, Rational(1)), InvalidDolbeaultData);
  DolbeaultProvider ok({{0, 0, Rational(2), 1}, {0, 1, Rational(2), 3}}, Rational(1, 100));
  CHECK(validate_epsilon(Rational(1, 20), ok));
  CHECK_FALSE(validate_epsilon(Rational(2), ok));
  CHECK_FALSE(validate_epsilon(Rational(8, 100), ok));  // eps/8 = M is not strict
  CHECK(alternating_multiplicity(ok, 0, 1, Rational(2)) == 2);
  DolbeaultProvider bad({{0, 0, Rational(2), 3}, {0, 1, Rational(2), 1}}, Rational(1, 100));
  CHECK_THROWS_AS(alternating_multiplicity(bad, 0, 1, Rational(2)), InvalidDolbeaultData);
}

TEST_CASE("dirac spectrum is sorted and tagged") {
  auto g = surface_preset(0, Rational(2));
  auto hp = HodgeProvider::surface(0, 2);
  DolbeaultProvider dp({{1, 0, Rational(4), 2}, {-1, 0, Rational(6), 1}}, Rational(1, 10));
  auto sorted = dirac_spectrum(g, hp, Rational(1, 3), Rational(1, 10), {-3, 3}, &dp);
  for (size_t i = 1; i < sorted.size(); ++i) CHECK(QuadSurd::compare(sorted[i - 1].value, sorted[i].value) <= 0);
  int t2 = 0;
  for (const auto& r : sorted)
    if (r.tag != EigTag::type1) {
      ++t2;
      CHECK(r.muSq.has_value());
    }
  CHECK(t2 == 4);
  double partial = finite_eta_partial(sorted, 2.0, sorted.size());
  double direct = 0;
  for (const auto& r : sorted) {
    double v = r.value.to_double();
    if (v != 0) direct += r.multiplicity * (v > 0 ? 1 : -1) * std::pow(std::fabs(v), -2.0);
  }
  CHECK(partial == doctest::Approx(direct).epsilon(1e-12));
  CHECK(finite_eta_partial(sorted, 2.0, 0) == 0.0);
}
