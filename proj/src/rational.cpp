#include "etaforge/rational.hpp"

#include <climits>
#include <mutex>
#include <ostream>
#include <vector>

#include "etaforge/errors.hpp"

namespace etaforge {

Rational::Rational(long n, long d) {
  if (d == 0) throw DomainError("zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  size_t start = s.find_first_not_of(" \t");
  if (start == std::string::npos) throw UsageError("empty rational literal");
  s = s.substr(start);

  auto bad = [&] { return UsageError("malformed rational literal '" + std::string(text) + "'"); };

  auto parse_int = [&](const std::string& t) {
    if (t.empty()) throw bad();
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw bad();
    for (size_t j = i; j < t.size(); ++j)
      if (t[j] < '0' || t[j] > '9') throw bad();
    mpz_class z;
    if (z.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0) throw bad();
    return z;
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpz_class n = parse_int(s.substr(0, slash));
    mpz_class d = parse_int(s.substr(slash + 1));
    if (d == 0) throw DomainError("zero denominator in '" + s + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot);
    std::string fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (ip.empty() || ip == "-" || ip == "+") ip += "0";
    if (fp.empty()) fp = "0";
    mpz_class whole = parse_int(ip);
    mpz_class frac = parse_int(fp);
    if (fp[0] == '-' || fp[0] == '+') throw bad();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    mpq_class q(::abs(whole) * scale + frac, scale);
    q.canonicalize();
    if (neg) q = -q;
    return Rational(q);
  }
  return Rational(parse_int(s));
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw UsageError("rational " + str() + " is not a machine integer");
  return v_.get_num().get_si();
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational bernoulli(long n) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  // sum_{j=0}^{n} C(n+1, j) B_j = 0
  while (static_cast<long>(cache.size()) <= n) {
    long k = static_cast<long>(cache.size());
    Rational s(0);
    for (long j = 0; j < k; ++j) s += binomial(k + 1, j) * cache[j];
    cache.push_back(-s / Rational(k + 1));
  }
  return cache[n];
}

}  // namespace etaforge
