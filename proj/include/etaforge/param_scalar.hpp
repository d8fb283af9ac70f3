#pragma once

#include <map>
#include <set>
#include <string>

#include "etaforge/rational.hpp"

namespace etaforge {

/// Exponent vector keyed by parameter name; zero exponents are never stored.
using Monomial = std::map<std::string, int>;

/// Polynomial with rational coefficients in named formal parameters (eps, delta, a, k, ...).
class ParamScalar {
 public:
  ParamScalar() = default;
  ParamScalar(const Rational& c);  // NOLINT(google-explicit-constructor)
  ParamScalar(long c) : ParamScalar(Rational(c)) {}  // NOLINT
  ParamScalar(int c) : ParamScalar(Rational(c)) {}   // NOLINT

  static ParamScalar var(const std::string& name);
  static ParamScalar monomial(const Monomial& mono, const Rational& coeff);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::set<std::string> params() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a parameter-free scalar; throws UsageError otherwise.
  Rational constant() const;
  /// Coefficient of the empty monomial.
  Rational constant_term() const;

  int degree_in(const std::string& name) const;
  /// Coefficient of name^j as a polynomial in the remaining parameters.
  ParamScalar coefficient(const std::string& name, int j) const;

  ParamScalar substitute(const std::string& name, const ParamScalar& value) const;
  /// Substitute every parameter; missing ones raise UsageError.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  ParamScalar derivative(const std::string& name) const;
  /// Antiderivative in `name` vanishing at name = 0.
  ParamScalar antiderivative(const std::string& name) const;
  ParamScalar integrate(const std::string& name, const ParamScalar& lo, const ParamScalar& hi) const;

  ParamScalar pow(int e) const;

  std::string str() const;

  ParamScalar operator-() const;
  ParamScalar& operator+=(const ParamScalar& o);
  ParamScalar& operator-=(const ParamScalar& o);
  ParamScalar& operator*=(const ParamScalar& o);

  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
  friend bool operator==(const ParamScalar& a, const ParamScalar& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

}  // namespace etaforge
