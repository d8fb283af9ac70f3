#include "etaforge/param_scalar.hpp"

#include <sstream>

#include "etaforge/errors.hpp"

namespace etaforge {

ParamScalar::ParamScalar(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

ParamScalar ParamScalar::var(const std::string& name) {
  return monomial(Monomial{{name, 1}}, Rational(1));
}

ParamScalar ParamScalar::monomial(const Monomial& mono, const Rational& coeff) {
  ParamScalar s;
  Monomial clean;
  for (const auto& [n, e] : mono)
    if (e != 0) clean[n] = e;
  s.add_term(clean, coeff);
  return s;
}

void ParamScalar::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::set<std::string> ParamScalar::params() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [n, e] : m) out.insert(n);
  return out;
}

bool ParamScalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ParamScalar::constant() const {
  if (!is_constant()) throw UsageError("scalar " + str() + " still depends on parameters");
  return constant_term();
}

Rational ParamScalar::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int ParamScalar::degree_in(const std::string& name) const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(name);
    if (it != m.end() && it->second > d) d = it->second;
  }
  return d;
}

ParamScalar ParamScalar::coefficient(const std::string& name, int j) const {
  ParamScalar out;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(name);
    int e = it == m.end() ? 0 : it->second;
    if (e != j) continue;
    Monomial rest = m;
    rest.erase(name);
    out.add_term(rest, c);
  }
  return out;
}

ParamScalar ParamScalar::substitute(const std::string& name, const ParamScalar& value) const {
  ParamScalar out;
  int d = degree_in(name);
  ParamScalar power(1);
  for (int j = 0; j <= d; ++j) {
    if (j > 0) power *= value;
    out += coefficient(name, j) * power;
  }
  return out;
}

Rational ParamScalar::evaluate(const std::map<std::string, Rational>& values) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [n, e] : m) {
      auto it = values.find(n);
      if (it == values.end()) throw UsageError("no value supplied for parameter '" + n + "'");
      t *= it->second.pow(e);
    }
    total += t;
  }
  return total;
}

ParamScalar ParamScalar::derivative(const std::string& name) const {
  ParamScalar out;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(name);
    if (it == m.end()) continue;
    Monomial nm = m;
    int e = it->second;
    if (e == 1) nm.erase(name);
    else nm[name] = e - 1;
    out.add_term(nm, c * Rational(e));
  }
  return out;
}

ParamScalar ParamScalar::antiderivative(const std::string& name) const {
  ParamScalar out;
  for (const auto& [m, c] : terms_) {
    Monomial nm = m;
    int e = nm.count(name) ? nm[name] : 0;
    nm[name] = e + 1;
    out.add_term(nm, c / Rational(e + 1));
  }
  return out;
}

ParamScalar ParamScalar::integrate(const std::string& name, const ParamScalar& lo, const ParamScalar& hi) const {
  ParamScalar F = antiderivative(name);
  return F.substitute(name, hi) - F.substitute(name, lo);
}

ParamScalar ParamScalar::pow(int e) const {
  if (e < 0) throw UsageError("negative power of a parameter polynomial");
  ParamScalar out(1), base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

std::string ParamScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool unit = m.empty() || c != Rational(1);
    if (unit) os << c;
    for (const auto& [n, e] : m) {
      if (unit) os << "*";
      unit = true;
      os << n;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
  ParamScalar out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (const auto& [n, e] : mb) m[n] += e;
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) {
  *this = *this * o;
  return *this;
}

}  // namespace etaforge
