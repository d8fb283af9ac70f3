#include <doctest.h>

#include "etaforge/cohomology.hpp"
#include "etaforge/errors.hpp"

using namespace etaforge;

TEST_CASE("Todd genus of projective space is one") {
  for (int m = 1; m <= 5; ++m) {
    auto g = projective_preset(m, Rational(1));
    CHECK(integrate(g, todd_class(g)).constant() == Rational(1));
  }
}

TEST_CASE("Todd genus of a surface is 1 - g") {
  for (int genus = 0; genus <= 4; ++genus) {
    auto g = surface_preset(genus, Rational(2));
    CHECK(integrate(g, todd_class(g)).constant() == Rational(1 - genus));
  }
}

TEST_CASE("A-hat genus vanishes on odd projective spaces and surfaces") {
  for (int m : {1, 3, 5}) {
    auto g = projective_preset(m, Rational(1));
    CHECK(integrate(g, ahat_class(g)).constant() == Rational(0));
  }
  auto s = surface_preset(3, Rational(1));
  CHECK(integrate(s, ahat_class(s)).constant() == Rational(0));
}

TEST_CASE("A-hat against Todd: td = e^{c1/2} A-hat") {
  for (int m = 1; m <= 4; ++m) {
    auto g = projective_preset(m, Rational(1));
    Rational c1(0);
    for (const auto& x : g.tangentRoots) c1 += x;
    auto half = CohClass::generator(m, ParamScalar(c1 / Rational(2)));
    CHECK(todd_class(g) == class_exp(half) * ahat_class(g));
  }
}

TEST_CASE("Riemann-Roch on surfaces: chi(K L^k) = k l") {
  for (int genus = 0; genus <= 3; ++genus)
    for (int l = 1; l <= 3; ++l) {
      auto g = surface_preset(genus, Rational(l));
      for (long k = -4; k <= 4; ++k) CHECK(hrr_chi_at(g, Rational(k)) == Rational(k * l));
      CHECK(index_integral(g, Rational(3, 2)) == Rational(l) * Rational(9, 8));
    }
}

TEST_CASE("Riemann-Roch on CP^3 with the formal square root of K") {
  auto g = projective_preset(3, Rational(1));
  for (long k = -5; k <= 5; ++k) {
    // chi(O(k - 2)) = (k+1) k (k-1) / 6
    CHECK(hrr_chi_at(g, Rational(k)) == Rational((k + 1) * k * (k - 1), 6));
  }
  auto chi = hrr_chi(g);
  CHECK(chi.degree_in("k") == 3);
  // Serre duality: chi(-k) = -chi(k) when m is odd
  for (long k = 0; k <= 4; ++k) CHECK(hrr_chi_at(g, Rational(-k)) == -hrr_chi_at(g, Rational(k)));
}

TEST_CASE("class arithmetic") {
  const int m = 3;
  auto u = CohClass::generator(m);
  CHECK(u.pow(4) == CohClass(m));
  auto e = class_exp(u.scaled(ParamScalar(2)));
  CHECK(e * class_exp(u.scaled(ParamScalar(-2))) == CohClass::constant(m, ParamScalar(1)));
  CHECK(e[3] == ParamScalar(Rational(8, 6)));
  CHECK_THROWS(class_exp(CohClass::constant(m, ParamScalar(1))));
  auto g = projective_preset(m, Rational(2));
  CHECK(ch_line(g, u) == class_exp(u));
  auto sub = CohClass::generator(m, ParamScalar::var("r")).substitute("r", ParamScalar(3));
  CHECK(sub == u.scaled(ParamScalar(3)));
}

TEST_CASE("geometry validation") {
  CHECK_THROWS_AS(explicit_geometry(1, Rational(1), Rational(1), Rational(1), {Rational(2)}), UsageError);
  CHECK_NOTHROW(explicit_geometry(1, Rational(1), Rational(1), Rational(-1), {Rational(2)}));
  CHECK_THROWS_AS(explicit_geometry(2, Rational(1), Rational(1), Rational(0), {Rational(0)}), UsageError);
  auto g = projective_preset(2, Rational(1));
  CHECK(g.virtual_trivial() == 1);
  CHECK(g.c1K == Rational(-3, 2));
}
