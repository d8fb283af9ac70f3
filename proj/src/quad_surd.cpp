#include "etaforge/quad_surd.hpp"

#include "etaforge/errors.hpp"

namespace etaforge {

namespace {

// d -> (s, d') with d = s^2 d', d' integer, small square factors removed.
std::pair<Rational, Rational> normalize_radicand(const Rational& d) {
  // n/q = (n q)/q^2
  mpz_class n = d.num() * d.den();
  mpz_class outside = 1;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return {Rational(mpq_class(root, d.den())), Rational(1)};
  }
  for (unsigned long f = 2; f < 1000; ++f) {
    mpz_class ff = f * f;
    if (ff > n) break;
    while (mpz_divisible_p(n.get_mpz_t(), ff.get_mpz_t())) {
      n /= ff;
      outside *= f;
    }
  }
  return {Rational(mpq_class(outside, d.den())), Rational(n)};
}

}  // namespace

QuadSurd::QuadSurd(const Rational& a, const Rational& b, const Rational& d) : a_(a), b_(b), d_(d) {
  if (d.sign() < 0) throw DomainError("negative radicand " + d.str());
  if (b_.is_zero() || d_.is_zero()) {
    b_ = Rational(0);
    d_ = Rational(0);
    return;
  }
  auto [s, dd] = normalize_radicand(d_);
  b_ *= s;
  if (dd == Rational(1)) {
    a_ += b_;
    b_ = Rational(0);
    d_ = Rational(0);
  } else {
    d_ = dd;
  }
}

int QuadSurd::sign() const {
  int sa = a_.sign(), sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 d
  Rational diff = a_ * a_ - b_ * b_ * d_;
  return sa * diff.sign();
}

double QuadSurd::to_double() const {
  if (b_.is_zero()) return a_.to_double();
  mpf_class root(0, 256), dd(d_.raw(), 256);
  mpf_sqrt(root.get_mpf_t(), dd.get_mpf_t());
  mpf_class v = mpf_class(a_.raw(), 256) + mpf_class(b_.raw(), 256) * root;
  return v.get_d();
}

std::string QuadSurd::str() const {
  if (b_.is_zero()) return a_.str();
  return a_.str() + (b_.sign() < 0 ? " - " : " + ") + b_.abs().str() + "*sqrt(" + d_.str() + ")";
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  if (y.is_rational()) return QuadSurd(x.a_ + y.a_, x.b_, x.d_);
  if (x.is_rational()) return QuadSurd(x.a_ + y.a_, y.b_, y.d_);
  if (x.d_ != y.d_) throw UsageError("adding surds with different radicands");
  return QuadSurd(x.a_ + y.a_, x.b_ + y.b_, x.d_);
}

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  if (y.is_rational()) return QuadSurd(x.a_ * y.a_, x.b_ * y.a_, x.d_);
  if (x.is_rational()) return QuadSurd(x.a_ * y.a_, x.a_ * y.b_, y.d_);
  if (x.d_ != y.d_) throw UsageError("multiplying surds with different radicands");
  return QuadSurd(x.a_ * y.a_ + x.b_ * y.b_ * x.d_, x.a_ * y.b_ + x.b_ * y.a_, x.d_);
}

int sign_of_two_surds(const Rational& alpha, const Rational& beta, const Rational& d1, const Rational& gamma,
                      const Rational& d2) {
  QuadSurd x(alpha, beta, d1);
  QuadSurd y(Rational(0), gamma, d2);
  if (y.is_rational()) return QuadSurd(x.a() + y.a(), x.b(), x.d()).sign();
  if (x.d() == y.d() || x.is_rational()) return (x + y).sign();
  int sx = x.sign(), sy = y.sign();
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  // sign(x + y) = sx * sign(x^2 - y^2), x^2 - y^2 = (a^2 + b^2 d - c^2 e) + 2ab sqrt(d)
  QuadSurd diff(x.a() * x.a() + x.b() * x.b() * x.d() - y.b() * y.b() * y.d(), Rational(2) * x.a() * x.b(), x.d());
  return sx * diff.sign();
}

int QuadSurd::compare(const QuadSurd& x, const QuadSurd& y) {
  return sign_of_two_surds(x.a_ - y.a_, x.b_, x.d_, -y.b_, y.d_);
}

}  // namespace etaforge
