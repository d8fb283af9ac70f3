#pragma once

#include <string>
#include <vector>

#include "etaforge/param_scalar.hpp"
#include "etaforge/rational.hpp"
#include "etaforge/series.hpp"

namespace etaforge {

/// Element of Q[params][u]/(u^{m+1}).
class CohClass {
 public:
  explicit CohClass(int m);
  CohClass(int m, std::vector<ParamScalar> coeffs);

  static CohClass constant(int m, const ParamScalar& c);
  /// c * u
  static CohClass generator(int m, const ParamScalar& c = ParamScalar(1));

  int m() const { return m_; }
  const ParamScalar& operator[](int n) const { return d_.at(n); }
  ParamScalar& operator[](int n) { return d_.at(n); }
  const std::vector<ParamScalar>& coefficients() const { return d_; }

  CohClass scaled(const ParamScalar& c) const;
  CohClass pow(int e) const;
  CohClass substitute(const std::string& name, const ParamScalar& value) const;

  CohClass operator-() const { return scaled(ParamScalar(-1)); }
  friend CohClass operator+(const CohClass& a, const CohClass& b);
  friend CohClass operator-(const CohClass& a, const CohClass& b);
  friend CohClass operator*(const CohClass& a, const CohClass& b);
  friend bool operator==(const CohClass& a, const CohClass& b) { return a.d_ == b.d_; }

 private:
  int m_;
  std::vector<ParamScalar> d_;
};

/// Requires a vanishing constant term.
CohClass class_exp(const CohClass& x);
/// f(x) = sum_n f_n x^n; x must have vanishing constant term.
CohClass apply_series(const TruncSeries& f, const CohClass& x);

/// Base data. Chern classes are rational multiples of the generator u.
/// tangentRoots may list more than m roots; the surplus stands for trivial
/// summands (e.g. TCP^m + C = (m+1) O(1)), which additive classes subtract.
struct Geometry {
  int m = 1;
  Rational topIntegral{1};
  Rational c1L{1};
  Rational c1K{0};
  std::vector<Rational> tangentRoots;
  std::string label;

  int virtual_trivial() const { return static_cast<int>(tangentRoots.size()) - m; }
  int default_order() const { return 2 * m + 4; }
};

/// Checks root count and the spin condition 2 c1K = -sum(roots); throws UsageError.
void validate_geometry(const Geometry& g);

/// Genus-g surface with a line bundle of degree l.
Geometry surface_preset(int genus, const Rational& degree);
/// CP^m with L = O(l); K is the formal square root -(m+1)/2 u.
Geometry projective_preset(int m, const Rational& degree);
Geometry explicit_geometry(int m, const Rational& topIntegral, const Rational& c1L, const Rational& c1K,
                           std::vector<Rational> roots, std::string label = "explicit");

ParamScalar integrate(const Geometry& g, const CohClass& cls);

CohClass todd_class(const Geometry& g);
/// exp(2 sum_i p(x_i)) = prod_i (x_i/2)/sinh(x_i/2)
CohClass ahat_class(const Geometry& g);
CohClass ch_line(const Geometry& g, const CohClass& a);

enum class CharClassName { todd, ahat };
CohClass char_class(const Geometry& g, CharClassName name);

/// chi(k) = integral of exp(c1K + k c1L) td(X), polynomial in the parameter "k".
ParamScalar hrr_chi(const Geometry& g);
Rational hrr_chi_at(const Geometry& g, const Rational& k);

/// integral of chi(s) ds over [0, r].
Rational index_integral(const Geometry& g, const Rational& r);

}  // namespace etaforge
