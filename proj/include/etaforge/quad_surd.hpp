#pragma once

#include <string>

#include "etaforge/rational.hpp"

namespace etaforge {

/// Exact real a + b*sqrt(d) with rational a, b and rational d >= 0.
/// The radicand is normalized to an integer with small square factors pulled
/// out; a perfect-square radicand folds into a (b = 0, d = 0).
class QuadSurd {
 public:
  QuadSurd() = default;
  QuadSurd(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadSurd(const Rational& a, const Rational& b, const Rational& d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& d() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }

  int sign() const;
  double to_double() const;
  std::string str() const;

  QuadSurd conjugate() const { return QuadSurd(a_, -b_, d_); }
  QuadSurd abs() const { return sign() < 0 ? -*this : *this; }

  QuadSurd operator-() const { return QuadSurd(-a_, -b_, d_); }
  /// Sum/product need a shared radicand unless one side is rational.
  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);

  friend bool operator==(const QuadSurd& x, const QuadSurd& y) { return compare(x, y) == 0; }
  friend bool operator<(const QuadSurd& x, const QuadSurd& y) { return compare(x, y) < 0; }
  /// Exact three-way comparison; radicands may differ.
  static int compare(const QuadSurd& x, const QuadSurd& y);

 private:
  Rational a_{0}, b_{0}, d_{0};
};

/// Exact sign of alpha + beta*sqrt(d1) + gamma*sqrt(d2).
int sign_of_two_surds(const Rational& alpha, const Rational& beta, const Rational& d1, const Rational& gamma,
                      const Rational& d2);

}  // namespace etaforge
