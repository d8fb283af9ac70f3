#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "etaforge/errors.hpp"
#include "etaforge/rational.hpp"

namespace etaforge {

/// Gaussian rational re + i*im.
struct GaussQ {
  Rational re{0}, im{0};

  GaussQ() = default;
  GaussQ(const Rational& r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussQ(long r) : re(r) {}             // NOLINT(google-explicit-constructor)
  GaussQ(const Rational& r, const Rational& i) : re(r), im(i) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::string str() const;

  GaussQ operator-() const { return {-re, -im}; }
  GaussQ& operator+=(const GaussQ& o) { re += o.re; im += o.im; return *this; }
  GaussQ& operator-=(const GaussQ& o) { re -= o.re; im -= o.im; return *this; }
  friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
  friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
  friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussQ& operator*=(const GaussQ& o) { return *this = *this * o; }
  friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
};

inline bool scalar_is_zero(const Rational& x) { return x.is_zero(); }
inline bool scalar_is_zero(const GaussQ& x) { return x.is_zero(); }

/// Dense square matrix over S.
template <class S>
struct Mat {
  int n = 1;
  std::vector<S> a;

  Mat() : a(1, S(0)) {}
  explicit Mat(int size) : n(size), a(static_cast<size_t>(size) * size, S(0)) {}
  static Mat identity(int size) {
    Mat m(size);
    for (int i = 0; i < size; ++i) m(i, i) = S(1);
    return m;
  }
  S& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const S& operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  bool is_zero() const {
    for (const auto& x : a)
      if (!scalar_is_zero(x)) return false;
    return true;
  }
  S trace() const {
    S t(0);
    for (int i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
  }
  Mat& operator+=(const Mat& o) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    return *this;
  }
  Mat scaled(const S& c) const {
    Mat m = *this;
    for (auto& x : m.a) x = x * c;
    return m;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.n == 1 && y.n != 1) return y.scaled(x.a[0]);
    if (y.n == 1 && x.n != 1) return x.scaled(y.a[0]);
    Mat m(x.n);
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k) {
        if (scalar_is_zero(x(i, k))) continue;
        for (int j = 0; j < x.n; ++j) m(i, j) += x(i, k) * y(k, j);
      }
    return m;
  }
  friend bool operator==(const Mat& x, const Mat& y) { return x.n == y.n && x.a == y.a; }
};

/// Alternating q-form on an n-dimensional space (n <= 7) with values in r x r
/// matrices over S (r = 1 for scalar forms). Values are stored on increasing
/// index tuples, encoded as bitmasks.
template <class S>
class AltForm {
 public:
  AltForm(int n, int q, int rank) : n_(n), q_(q), rank_(rank), vals_(size_t{1} << n, Mat<S>(rank)) {
    if (n < 0 || n > 7) throw UsageError("form dimension must lie in 0..7");
    if (q < 0) throw UsageError("negative form degree");
  }

  static AltForm constant(int n, const Mat<S>& m) {
    AltForm f(n, 0, m.n);
    f.vals_[0] = m;
    return f;
  }

  int dim() const { return n_; }
  int degree() const { return q_; }
  int rank() const { return rank_; }

  /// Value on the increasing tuple encoded by `mask` (popcount must be q).
  const Mat<S>& at_mask(std::uint32_t mask) const { return vals_[mask]; }
  void set_mask(std::uint32_t mask, Mat<S> m) {
    if (std::popcount(mask) != q_) throw UsageError("mask does not match form degree");
    vals_[mask] = std::move(m);
  }

  /// Value on an arbitrary tuple of basis indices (antisymmetry applied).
  Mat<S> eval(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != q_) throw UsageError("wrong number of arguments");
    std::vector<int> v = idx;
    int sign = 1;
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = 0; j + 1 < v.size() - i; ++j)
        if (v[j] > v[j + 1]) {
          std::swap(v[j], v[j + 1]);
          sign = -sign;
        }
    std::uint32_t mask = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i > 0 && v[i] == v[i - 1]) return Mat<S>(rank_);
      mask |= 1u << v[i];
    }
    return sign > 0 ? vals_[mask] : vals_[mask].scaled(S(-1));
  }

  bool is_zero() const {
    for (const auto& m : vals_)
      if (!m.is_zero()) return false;
    return true;
  }

  AltForm scaled(const S& c) const {
    AltForm f = *this;
    for (auto& m : f.vals_) m = m.scaled(c);
    return f;
  }
  /// Pointwise F(...) * M.
  AltForm times_right(const Mat<S>& m) const {
    AltForm f = *this;
    for (auto& v : f.vals_) v = v * m;
    f.rank_ = std::max(rank_, m.n);
    return f;
  }
  AltForm times_left(const Mat<S>& m) const {
    AltForm f = *this;
    for (auto& v : f.vals_) v = m * v;
    f.rank_ = std::max(rank_, m.n);
    return f;
  }

  AltForm<S> trace() const {
    AltForm<S> f(n_, q_, 1);
    for (size_t i = 0; i < vals_.size(); ++i) f.vals_[i].a[0] = vals_[i].trace();
    return f;
  }

  friend AltForm operator+(const AltForm& x, const AltForm& y) {
    if (x.n_ != y.n_ || x.q_ != y.q_ || x.rank_ != y.rank_) throw UsageError("adding incompatible forms");
    AltForm f = x;
    for (size_t i = 0; i < f.vals_.size(); ++i) f.vals_[i] += y.vals_[i];
    return f;
  }
  friend AltForm operator-(const AltForm& x, const AltForm& y) { return x + y.scaled(S(-1)); }
  friend bool operator==(const AltForm& x, const AltForm& y) {
    return x.n_ == y.n_ && x.q_ == y.q_ && x.rank_ == y.rank_ && x.vals_ == y.vals_;
  }

  /// (F^G)(v_1..v_{a+b}) = sum over (a,b)-shuffles sgn * F(v_A) G(v_B), which equals
  /// 1/(a! b!) times the full permutation sum. Degree overflow gives the zero form.
  friend AltForm wedge(const AltForm& F, const AltForm& G) {
    if (F.n_ != G.n_) throw UsageError("wedge of forms on different spaces");
    const int a = F.q_, b = G.q_, n = F.n_;
    const int rank = std::max(F.rank_, G.rank_);
    AltForm out(n, a + b, rank);
    if (a + b > n) return out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != a + b) continue;
      Mat<S> acc(rank);
      for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
        if (std::popcount(sub) == a) {
          const std::uint32_t rest = mask & ~sub;
          const Mat<S>& fa = F.vals_[sub];
          const Mat<S>& gb = G.vals_[rest];
          if (!fa.is_zero() && !gb.is_zero()) {
            Mat<S> prod = fa * gb;
            acc += shuffle_sign(sub, rest) > 0 ? prod : prod.scaled(S(-1));
          }
        }
        if (sub == 0) break;
      }
      out.vals_[mask] = std::move(acc);
    }
    return out;
  }

 private:
  // sign of the permutation listing A then B, relative to sorted order
  static int shuffle_sign(std::uint32_t A, std::uint32_t B) {
    int inv = 0;
    for (int i = 0; i < 32; ++i)
      if (A >> i & 1u) inv += std::popcount(B & ((1u << i) - 1u));
    return inv % 2 == 0 ? 1 : -1;
  }

  int n_, q_, rank_;
  std::vector<Mat<S>> vals_;
};

template <class S>
AltForm<S> wedge_power(const AltForm<S>& F, int k) {
  AltForm<S> out = AltForm<S>::constant(F.dim(), Mat<S>::identity(F.rank()));
  for (int i = 0; i < k; ++i) out = wedge(out, F);
  return out;
}

using EndValuedForm = AltForm<Rational>;
using ScalarForm = AltForm<Rational>;
using GaussForm = AltForm<GaussQ>;

GaussForm to_gauss(const AltForm<Rational>& f);

/// Flat model of T_yY = R e + TX with metric = identity and J e_j = f_j, J f_j = -e_j, J e = 0.
/// With the vertical direction, index 0 is e and e_j, f_j sit at 2j-1, 2j (j = 1..m);
/// without it they sit at 2j-2, 2j-1.
struct KahlerModel {
  int m = 1;
  bool vertical = true;

  int dim() const { return 2 * m + (vertical ? 1 : 0); }
  int e_index(int j) const { return vertical ? 2 * j - 1 : 2 * j - 2; }
  int f_index(int j) const { return vertical ? 2 * j : 2 * j - 1; }
  bool is_horizontal(int i) const { return !vertical || i != 0; }
};

Mat<Rational> complex_structure(const KahlerModel& model);
/// omega(X, Y) = g(JX, Y), so omega(e_j, f_j) = 1.
ScalarForm kahler_form(const KahlerModel& model);

struct ModelTensors {
  ScalarForm omega;
  Mat<Rational> J;
  EndValuedForm omegaJ;  // omega (x) J
  EndValuedForm Omega;   // Omega(f1,f2)f = omega(f1,f) J f2 - omega(f2,f) J f1
  EndValuedForm alpha1;  // alpha1(f) e = J f
  EndValuedForm alpha2;  // alpha2(f1) f = g(f1, f) e
  EndValuedForm alpha3;  // alpha3(f1) e = -f1
};

ModelTensors build_tensors(const KahlerModel& model);

/// R(X,Y)Z = (kappa/4)[g(Y,Z)X - g(X,Z)Y + g(JY,Z)JX - g(JX,Z)JY - 2g(JX,Y)JZ] on the
/// complex coordinates listed in `block` (1-based; empty = all), zero elsewhere.
EndValuedForm constant_curvature_block(const KahlerModel& model, const Rational& kappa,
                                       const std::vector<int>& block = {});

bool satisfies_bianchi(const KahlerModel& model, const EndValuedForm& R);
bool commutes_with_J(const KahlerModel& model, const EndValuedForm& R);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Omega^Omega = 0, Omega^R = R^Omega = 0, R^alpha1 = 0, tr[(Omega J)^k] = -2^k omega^k (k <= m),
/// and alpha1^alpha2 = -Omega J, over the curvature specimens `kappas`.
IdentityReport identity_suite(const KahlerModel& model, const std::vector<Rational>& kappas = {Rational(1)});

/// Restriction of the complexified R to T^{1,0}, basis e_j - i f_j.
AltForm<GaussQ> holomorphic_part(const KahlerModel& model, const EndValuedForm& R);

/// The three trace expansions of T = R + 2 delta omega J + delta Omega against their
/// complexified right-hand sides. The second identity is checked with the term
/// 2 eps_N delta omega; the variant without delta is reported separately.
IdentityReport trace_expansion_check(const KahlerModel& model, int N, const Rational& delta,
                                     const Rational& kappa = Rational(1));

enum class ParityVariant { one = 1, two = 2, three = 3 };

long parity_count(int N, int k, ParityVariant variant);
long parity_closed_form(int N, int k, ParityVariant variant);

}  // namespace etaforge
