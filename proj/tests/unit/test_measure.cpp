#include <doctest.h>

#include <cmath>

#include "etaforge/errors.hpp"
#include "etaforge/measure.hpp"

using namespace etaforge;

TEST_CASE("Laplace identity on the three reference points") {
  const std::vector<ModelPoint> pts{{1, {}}, {3, {1.0}}, {5, {1.0, 2.0}}};
  for (const auto& pt : pts)
    for (double t : {0.5, 1.0, 2.0}) {
      auto c = laplace_check(pt, t);
      CHECK(c.relError < 1e-6);
      CHECK(c.tailBound <= 1e-12 * c.target * 1.0001);
      CHECK(c.sMax > 0);
    }
}

TEST_CASE("one-dimensional case in closed form") {
  ModelPoint pt{1, {}};
  CHECK(pt.n_y() == 0);
  // density s^{-1/2} / (sqrt(4 pi) Gamma(1/2)); its mass on [0, X] is sqrt(X)/pi
  for (double X : {0.25, 1.0, 9.0}) {
    double mass = limit_measure_apply(pt, [](double) { return 1.0; }, X);
    CHECK(mass == doctest::Approx(std::sqrt(X) / M_PI).epsilon(1e-10));
  }
  CHECK(heat_density(pt, 1.0) == doctest::Approx(1.0 / std::sqrt(4 * M_PI)));
}

TEST_CASE("near-zero mass scales like the support width") {
  for (const ModelPoint& pt : {ModelPoint{1, {}}, ModelPoint{3, {1.0}}, ModelPoint{5, {1.0, 2.0}}}) {
    std::vector<double> ratios;
    for (double e : {0.25, 1.0 / 16, 1.0 / 64}) ratios.push_back(near_zero_bound(pt, e).ratio);
    const double hi = *std::max_element(ratios.begin(), ratios.end());
    const double lo = *std::min_element(ratios.begin(), ratios.end());
    CHECK(hi / lo < 4.0);
    CHECK(lo > 0);
  }
}

TEST_CASE("model point validation") {
  CHECK_THROWS_AS(ModelPoint({2, {}}).validate(), UsageError);
  CHECK_THROWS_AS(ModelPoint({3, {1.0, 2.0}}).validate(), UsageError);
  CHECK_THROWS_AS(ModelPoint({3, {-1.0}}).validate(), UsageError);
  CHECK_THROWS_AS(heat_density(ModelPoint{1, {}}, 0.0), UsageError);
  CHECK_THROWS_AS(near_zero_bound(ModelPoint{1, {}}, 1.5), UsageError);
  CHECK(ModelPoint({5, {1.0}}).n_y() == 1);
}

TEST_CASE("tail cutoff shrinks with larger t") {
  ModelPoint pt{3, {1.0}};
  CHECK(tail_cutoff(pt, 2.0) < tail_cutoff(pt, 0.5));
}
