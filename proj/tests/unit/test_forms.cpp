#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "etaforge/forms.hpp"

using namespace etaforge;

namespace {

ScalarForm random_form(int n, int q, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-5, 5);
  ScalarForm f(n, q, 1);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != q) continue;
    Mat<Rational> v(1);
    v(0, 0) = Rational(d(rng));
    f.set_mask(mask, v);
  }
  return f;
}

int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// (1/(a! b!)) sum over all permutations of the argument slots.
Rational wedge_by_permutations(const ScalarForm& F, const ScalarForm& G, const std::vector<int>& args) {
  const int a = F.degree(), b = G.degree();
  std::vector<int> slot(a + b);
  std::iota(slot.begin(), slot.end(), 0);
  Rational acc(0);
  do {
    std::vector<int> fa, gb;
    for (int i = 0; i < a; ++i) fa.push_back(args[slot[i]]);
    for (int i = a; i < a + b; ++i) gb.push_back(args[slot[i]]);
    acc += Rational(perm_sign(slot)) * F.eval(fa)(0, 0) * G.eval(gb)(0, 0);
  } while (std::next_permutation(slot.begin(), slot.end()));
  return acc / (factorial(a) * factorial(b));
}

}  // namespace

TEST_CASE("wedge equals the normalized permutation sum") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5;
    const int a = 1 + trial % 3, b = 1 + (trial / 3) % 2;
    auto F = random_form(n, a, rng), G = random_form(n, b, rng);
    auto W = wedge(F, G);
    std::vector<int> idx(a + b);
    // every increasing tuple
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != a + b) continue;
      int j = 0;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) idx[j++] = i;
      CHECK(W.eval(idx)(0, 0) == wedge_by_permutations(F, G, idx));
    }
  }
}

TEST_CASE("wedge is associative and graded commutative") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 6;
    const int a = 1 + trial % 2, b = 1 + trial % 3, c = 1;
    auto A = random_form(n, a, rng), B = random_form(n, b, rng), C = random_form(n, c, rng);
    CHECK(wedge(wedge(A, B), C) == wedge(A, wedge(B, C)));
    auto AB = wedge(A, B), BA = wedge(B, A);
    CHECK(AB == ((a * b) % 2 == 0 ? BA : BA.scaled(Rational(-1))));
  }
  auto one = random_form(3, 2, rng);
  CHECK(wedge(one, random_form(3, 2, rng)).is_zero());  // degree 4 > 3
}

TEST_CASE("stored forms are antisymmetric") {
  std::mt19937_64 rng(8);
  auto F = random_form(5, 3, rng);
  CHECK(F.eval({0, 2, 4}) == F.eval({2, 0, 4}).scaled(Rational(-1)));
  CHECK(F.eval({4, 2, 0}) == F.eval({0, 2, 4}).scaled(Rational(-1)));
  CHECK(F.eval({1, 1, 3}).is_zero());
  auto omega = kahler_form(KahlerModel{2});
  auto t = build_tensors(KahlerModel{2});
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(t.Omega.eval({i, j}) == t.Omega.eval({j, i}).scaled(Rational(-1)));
  CHECK(omega.eval({1, 2})(0, 0) == Rational(1));
}

TEST_CASE("curvature specimens satisfy Bianchi and commute with J") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
  for (int trial = 0; trial < 20; ++trial) {
    KahlerModel model{1 + trial % 3};
    Rational kappa(num(rng), den(rng));
    auto R = constant_curvature_block(model, kappa);
    CHECK(satisfies_bianchi(model, R));
    CHECK(commutes_with_J(model, R));
  }
  KahlerModel m3{3};
  auto blk = constant_curvature_block(m3, Rational(2), {1, 3}) + constant_curvature_block(m3, Rational(-1), {2});
  CHECK(satisfies_bianchi(m3, blk));
  CHECK(commutes_with_J(m3, blk));
}

TEST_CASE("tensor identity suite") {
  for (int m = 1; m <= 3; ++m) {
    auto rep = identity_suite(KahlerModel{m}, {Rational(1), Rational(-2, 3)});
    for (const auto& c : rep.checks) {
      INFO(c.name << " " << c.detail);
      CHECK(c.pass);
    }
    CHECK(rep.checks.size() >= 6);
  }
}

TEST_CASE("trace expansions") {
  for (int m : {1, 2})
    for (int N : {2, 4})
      for (const Rational& delta : {Rational(0), Rational(1, 3), Rational(1)}) {
        auto rep = trace_expansion_check(KahlerModel{m, false}, N, delta);
        for (const auto& c : rep.checks) {
          INFO("m=" << m << " N=" << N << " delta=" << delta << " " << c.name << " " << c.detail);
          CHECK(c.pass);
        }
      }
}

TEST_CASE("holomorphic part at delta = 0: tr R^N = 2 Re tr (R^{1,0})^N") {
  KahlerModel model{2, false};
  auto R = constant_curvature_block(model, Rational(3));
  auto H = holomorphic_part(model, R);
  for (int N : {2, 4}) {
    auto lhs = wedge_power(R, N).trace();
    auto rhs = wedge_power(H, N).trace();
    for (std::uint32_t mask = 0; mask < (1u << model.dim()); ++mask) {
      if (std::popcount(mask) != 2 * N) continue;
      CHECK(rhs.at_mask(mask)(0, 0).re * Rational(2) == lhs.at_mask(mask)(0, 0));
    }
  }
}

TEST_CASE("parity counts match the closed forms") {
  for (int N : {2, 4, 6, 8})
    for (int k = 1; k <= N + 1; ++k)
      for (auto v : {ParityVariant::one, ParityVariant::two, ParityVariant::three}) {
        INFO("N=" << N << " k=" << k << " variant=" << static_cast<int>(v));
        CHECK(parity_count(N, k, v) == parity_closed_form(N, k, v));
      }
  CHECK(parity_count(4, 5, ParityVariant::one) == 0);
  CHECK(parity_count(4, 1, ParityVariant::one) == 4);
  CHECK(parity_count(4, 1, ParityVariant::three) == 1);
  CHECK_THROWS_AS(parity_count(3, 1, ParityVariant::one), UsageError);
  CHECK_THROWS_AS(parity_closed_form(4, 0, ParityVariant::two), UsageError);
}
