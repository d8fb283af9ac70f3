#include "etaforge/cohomology.hpp"

#include "etaforge/errors.hpp"

namespace etaforge {

CohClass::CohClass(int m) : m_(m), d_(m < 0 ? 0 : m + 1) {
  if (m < 0) throw UsageError("negative complex dimension");
}

CohClass::CohClass(int m, std::vector<ParamScalar> coeffs) : CohClass(m) {
  for (size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= m; ++i) d_[i] = coeffs[i];
}

CohClass CohClass::constant(int m, const ParamScalar& c) {
  CohClass x(m);
  x.d_[0] = c;
  return x;
}

CohClass CohClass::generator(int m, const ParamScalar& c) {
  CohClass x(m);
  if (m >= 1) x.d_[1] = c;
  return x;
}

CohClass CohClass::scaled(const ParamScalar& c) const {
  CohClass x = *this;
  for (auto& v : x.d_) v *= c;
  return x;
}

CohClass CohClass::pow(int e) const {
  CohClass out = constant(m_, 1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

CohClass CohClass::substitute(const std::string& name, const ParamScalar& value) const {
  CohClass x = *this;
  for (auto& v : x.d_) v = v.substitute(name, value);
  return x;
}

static void same_dim(const CohClass& a, const CohClass& b) {
  if (a.m() != b.m()) throw UsageError("cohomology classes of different dimension");
}

CohClass operator+(const CohClass& a, const CohClass& b) {
  same_dim(a, b);
  CohClass x = a;
  for (int i = 0; i <= a.m_; ++i) x.d_[i] += b.d_[i];
  return x;
}

CohClass operator-(const CohClass& a, const CohClass& b) { return a + (-b); }

CohClass operator*(const CohClass& a, const CohClass& b) {
  same_dim(a, b);
  CohClass x(a.m_);
  for (int i = 0; i <= a.m_; ++i) {
    if (a.d_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.m_; ++j) x.d_[i + j] += a.d_[i] * b.d_[j];
  }
  return x;
}

CohClass class_exp(const CohClass& x) {
  if (!x[0].is_zero()) throw DomainError("exponential of a class with nonzero degree-0 part");
  CohClass out = CohClass::constant(x.m(), 1);
  CohClass term = out;
  for (int n = 1; n <= x.m(); ++n) {
    term = term * x;
    out = out + term.scaled(ParamScalar(factorial(n).inverse()));
  }
  return out;
}

CohClass apply_series(const TruncSeries& f, const CohClass& x) {
  if (!x[0].is_zero()) throw DomainError("series argument must have vanishing degree-0 part");
  if (f.order() < x.m()) throw UsageError("series order below the cohomological degree");
  CohClass out(x.m());
  CohClass power = CohClass::constant(x.m(), 1);
  for (int n = 0; n <= x.m(); ++n) {
    out = out + power.scaled(f[n]);
    power = power * x;
  }
  return out;
}

void validate_geometry(const Geometry& g) {
  if (g.m < 1) throw UsageError("complex dimension must be >= 1");
  if (static_cast<int>(g.tangentRoots.size()) < g.m)
    throw UsageError("need at least m tangent Chern roots");
  Rational sum(0);
  for (const auto& r : g.tangentRoots) sum += r;
  if (Rational(2) * g.c1K != -sum)
    throw UsageError("spin condition violated: 2 c1(K) = " + (Rational(2) * g.c1K).str() +
                     " but -c1(X) = " + (-sum).str());
}

Geometry surface_preset(int genus, const Rational& degree) {
  if (genus < 0) throw UsageError("genus must be >= 0");
  Geometry g;
  g.m = 1;
  g.topIntegral = Rational(1);
  g.c1L = degree;
  g.c1K = Rational(genus - 1);
  g.tangentRoots = {Rational(2 - 2 * genus)};
  g.label = "surface(g=" + std::to_string(genus) + ",l=" + degree.str() + ")";
  validate_geometry(g);
  return g;
}

Geometry projective_preset(int m, const Rational& degree) {
  Geometry g;
  g.m = m;
  g.topIntegral = Rational(1);
  g.c1L = degree;
  g.c1K = Rational(-(m + 1), 2);
  g.tangentRoots.assign(m + 1, Rational(1));
  g.label = "projective(m=" + std::to_string(m) + ",l=" + degree.str() + ")";
  validate_geometry(g);
  return g;
}

Geometry explicit_geometry(int m, const Rational& topIntegral, const Rational& c1L, const Rational& c1K,
                           std::vector<Rational> roots, std::string label) {
  Geometry g;
  g.m = m;
  g.topIntegral = topIntegral;
  g.c1L = c1L;
  g.c1K = c1K;
  g.tangentRoots = std::move(roots);
  g.label = std::move(label);
  validate_geometry(g);
  return g;
}

ParamScalar integrate(const Geometry& g, const CohClass& cls) {
  if (cls.m() != g.m) throw UsageError("class dimension does not match geometry");
  return cls[g.m] * ParamScalar(g.topIntegral);
}

CohClass todd_class(const Geometry& g) {
  TruncSeries td = universal_series(UniversalSeries::todd, g.default_order());
  CohClass out = CohClass::constant(g.m, 1);
  for (const auto& r : g.tangentRoots) out = out * apply_series(td, CohClass::generator(g.m, r));
  return out;
}

CohClass ahat_class(const Geometry& g) {
  TruncSeries p = universal_series(UniversalSeries::p_ahat, g.default_order());
  CohClass sum(g.m);
  for (const auto& r : g.tangentRoots) sum = sum + apply_series(p, CohClass::generator(g.m, r));
  return class_exp(sum.scaled(2));
}

CohClass ch_line(const Geometry& g, const CohClass& a) {
  if (a.m() != g.m) throw UsageError("class dimension does not match geometry");
  return class_exp(a);
}

CohClass char_class(const Geometry& g, CharClassName name) {
  return name == CharClassName::todd ? todd_class(g) : ahat_class(g);
}

ParamScalar hrr_chi(const Geometry& g) {
  CohClass a = CohClass::generator(g.m, ParamScalar(g.c1K) + ParamScalar::var("k") * ParamScalar(g.c1L));
  return integrate(g, ch_line(g, a) * todd_class(g));
}

Rational hrr_chi_at(const Geometry& g, const Rational& k) { return hrr_chi(g).substitute("k", k).constant(); }

Rational index_integral(const Geometry& g, const Rational& r) {
  return hrr_chi(g).integrate("k", ParamScalar(0), ParamScalar(r)).constant();
}

}  // namespace etaforge
