#include "etaforge/forms.hpp"

#include <functional>

namespace etaforge {

std::string GaussQ::str() const {
  if (im.is_zero()) return re.str();
  return re.str() + (im.sign() < 0 ? "-" : "+") + im.abs().str() + "i";
}

GaussForm to_gauss(const AltForm<Rational>& f) {
  GaussForm g(f.dim(), f.degree(), f.rank());
  for (std::uint32_t mask = 0; mask < (1u << f.dim()); ++mask) {
    if (std::popcount(mask) != f.degree()) continue;
    const auto& src = f.at_mask(mask);
    Mat<GaussQ> m(src.n);
    for (size_t i = 0; i < src.a.size(); ++i) m.a[i] = GaussQ(src.a[i]);
    g.set_mask(mask, m);
  }
  return g;
}

Mat<Rational> complex_structure(const KahlerModel& model) {
  Mat<Rational> J(model.dim());
  for (int j = 1; j <= model.m; ++j) {
    J(model.f_index(j), model.e_index(j)) = Rational(1);   // J e_j = f_j
    J(model.e_index(j), model.f_index(j)) = Rational(-1);  // J f_j = -e_j
  }
  return J;
}

ScalarForm kahler_form(const KahlerModel& model) {
  const auto J = complex_structure(model);
  const int n = model.dim();
  ScalarForm w(n, 2, 1);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Mat<Rational> v(1);
      v.a[0] = J(b, a);  // g(J e_a, e_b)
      w.set_mask((1u << a) | (1u << b), v);
    }
  return w;
}

ModelTensors build_tensors(const KahlerModel& model) {
  const int n = model.dim();
  ModelTensors t{kahler_form(model), complex_structure(model), EndValuedForm(n, 2, n), EndValuedForm(n, 2, n),
                 EndValuedForm(n, 1, n), EndValuedForm(n, 1, n), EndValuedForm(n, 1, n)};
  const auto& J = t.J;
  auto om = [&](int a, int b) { return J(b, a); };

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const std::uint32_t mask = (1u << a) | (1u << b);
      t.omegaJ.set_mask(mask, J.scaled(om(a, b)));
      Mat<Rational> O(n);
      for (int c = 0; c < n; ++c)
        for (int row = 0; row < n; ++row) O(row, c) = om(a, c) * J(row, b) - om(b, c) * J(row, a);
      t.Omega.set_mask(mask, O);
    }

  if (model.vertical) {
    for (int a = 1; a < n; ++a) {
      Mat<Rational> A1(n), A2(n), A3(n);
      for (int row = 0; row < n; ++row) A1(row, 0) = J(row, a);
      A2(0, a) = Rational(1);
      A3(a, 0) = Rational(-1);
      t.alpha1.set_mask(1u << a, A1);
      t.alpha2.set_mask(1u << a, A2);
      t.alpha3.set_mask(1u << a, A3);
    }
  }
  return t;
}

EndValuedForm constant_curvature_block(const KahlerModel& model, const Rational& kappa, const std::vector<int>& block) {
  const int n = model.dim();
  const auto J = complex_structure(model);
  std::vector<bool> in(n, false);
  if (block.empty()) {
    for (int i = 0; i < n; ++i) in[i] = model.is_horizontal(i);
  } else {
    for (int j : block) {
      if (j < 1 || j > model.m) throw UsageError("block coordinate out of range");
      in[model.e_index(j)] = in[model.f_index(j)] = true;
    }
  }
  const Rational q = kappa / Rational(4);
  auto delta = [](int x, int y) { return x == y ? Rational(1) : Rational(0); };
  EndValuedForm R(n, 2, n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Mat<Rational> M(n);
      if (in[a] && in[b]) {
        for (int c = 0; c < n; ++c) {
          if (!in[c]) continue;
          for (int row = 0; row < n; ++row) {
            Rational v = delta(b, c) * delta(row, a) - delta(a, c) * delta(row, b) + J(c, b) * J(row, a) -
                         J(c, a) * J(row, b) - Rational(2) * J(b, a) * J(row, c);
            M(row, c) = q * v;
          }
        }
      }
      R.set_mask((1u << a) | (1u << b), M);
    }
  return R;
}

bool satisfies_bianchi(const KahlerModel& model, const EndValuedForm& R) {
  const int n = model.dim();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        auto A = R.eval({x, y}), B = R.eval({y, z}), C = R.eval({z, x});
        for (int row = 0; row < n; ++row)
          if (!(A(row, z) + B(row, x) + C(row, y)).is_zero()) return false;
      }
  return true;
}

bool commutes_with_J(const KahlerModel& model, const EndValuedForm& R) {
  const auto J = complex_structure(model);
  for (std::uint32_t mask = 0; mask < (1u << model.dim()); ++mask) {
    if (std::popcount(mask) != 2) continue;
    const auto& M = R.at_mask(mask);
    if (!(M * J == J * M)) return false;
  }
  return true;
}

namespace {

IdentityCheck zero_check(std::string name, const EndValuedForm& f) {
  return {std::move(name), f.is_zero(), f.is_zero() ? "" : "form is not identically zero"};
}

template <class S>
IdentityCheck equal_check(std::string name, const AltForm<S>& lhs, const AltForm<S>& rhs, std::string detail = {}) {
  const bool ok = lhs == rhs;
  if (!ok && detail.empty()) detail = "sides differ";
  return {std::move(name), ok, std::move(detail)};
}

std::vector<EndValuedForm> specimens(const KahlerModel& model, const std::vector<Rational>& kappas) {
  std::vector<EndValuedForm> out;
  for (const auto& k : kappas) out.push_back(constant_curvature_block(model, k));
  if (model.m >= 2 && !kappas.empty()) {
    // product specimen: separate blocks on the first coordinate and on the rest
    std::vector<int> rest;
    for (int j = 2; j <= model.m; ++j) rest.push_back(j);
    out.push_back(constant_curvature_block(model, kappas.front(), {1}) +
                  constant_curvature_block(model, kappas.back() + Rational(1), rest));
  }
  return out;
}

}  // namespace

IdentityReport identity_suite(const KahlerModel& model, const std::vector<Rational>& kappas) {
  IdentityReport rep;
  const auto t = build_tensors(model);
  const std::string tag = "m=" + std::to_string(model.m);

  rep.checks.push_back(zero_check(tag + " Omega^Omega=0", wedge(t.Omega, t.Omega)));

  int idx = 0;
  for (const auto& R : specimens(model, kappas)) {
    const std::string s = tag + " R#" + std::to_string(idx++);
    rep.checks.push_back({s + " Bianchi", satisfies_bianchi(model, R), ""});
    rep.checks.push_back({s + " [R,J]=0", commutes_with_J(model, R), ""});
    rep.checks.push_back(zero_check(s + " Omega^R=0", wedge(t.Omega, R)));
    rep.checks.push_back(zero_check(s + " R^Omega=0", wedge(R, t.Omega)));
    if (model.vertical) rep.checks.push_back(zero_check(s + " R^alpha1=0", wedge(R, t.alpha1)));
  }

  const EndValuedForm OJ = t.Omega.times_right(t.J);
  for (int k = 1; k <= model.m; ++k) {
    ScalarForm lhs = wedge_power(OJ, k).trace();
    ScalarForm rhs = wedge_power(t.omega, k).scaled(-Rational(2).pow(k));
    rep.checks.push_back(equal_check(tag + " tr[(Omega J)^" + std::to_string(k) + "]=-2^k omega^k", lhs, rhs));
  }
  if (model.vertical)
    rep.checks.push_back(
        equal_check(tag + " alpha1^alpha2=-Omega J", wedge(t.alpha1, t.alpha2), OJ.scaled(Rational(-1))));
  return rep;
}

AltForm<GaussQ> holomorphic_part(const KahlerModel& model, const EndValuedForm& R) {
  const int n = model.dim();
  AltForm<GaussQ> H(n, 2, model.m);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const std::uint32_t mask = (1u << a) | (1u << b);
      const auto& M = R.at_mask(mask);
      Mat<GaussQ> C(model.m);
      // R(e_j - i f_j) = sum_l (g(R e_j, e_l) + i g(R e_j, f_l)) (e_l - i f_l)
      for (int l = 1; l <= model.m; ++l)
        for (int j = 1; j <= model.m; ++j)
          C(l - 1, j - 1) = GaussQ(M(model.e_index(l), model.e_index(j)), M(model.f_index(l), model.e_index(j)));
      H.set_mask(mask, C);
    }
  return H;
}

IdentityReport trace_expansion_check(const KahlerModel& model, int N, const Rational& delta, const Rational& kappa) {
  if (N < 2 || N % 2 != 0) throw UsageError("N must be an even integer >= 2");
  IdentityReport rep;
  const int n = model.dim();
  const auto t = build_tensors(model);
  const EndValuedForm R = constant_curvature_block(model, kappa);
  const EndValuedForm T = R + t.omegaJ.scaled(Rational(2) * delta) + t.Omega.scaled(delta);
  const GaussQ epsN = N == 2 ? GaussQ(1) : GaussQ(0);

  const GaussForm w = to_gauss(t.omega);
  const GaussForm dw = w.scaled(GaussQ(Rational(0), Rational(2) * delta));  // 2 i delta omega
  GaussForm H = holomorphic_part(model, R) + w.times_right(Mat<GaussQ>::identity(model.m)).scaled(GaussQ(0, 2 * delta));
  const std::string tag = "N=" + std::to_string(N) + " m=" + std::to_string(model.m) + " delta=" + delta.str();

  // (1)
  {
    GaussForm lhs = to_gauss(wedge_power(T, N).trace());
    GaussForm rhs = wedge_power(H, N).trace().scaled(2) + wedge_power(dw, N).scaled(2);
    rep.checks.push_back(equal_check(tag + " tr T^N", lhs, rhs));
  }
  // (2)
  {
    GaussForm lhs = to_gauss(wedge_power(T, N - 1).times_left(t.J).trace());
    GaussForm base = wedge_power(H, N - 1).trace().scaled(GaussQ(0, 2)) + wedge_power(dw, N - 1).scaled(GaussQ(0, 2));
    GaussForm corrected = base, literal = base;
    if (N == 2) {
      corrected = corrected + w.scaled(epsN * GaussQ(Rational(2) * delta));
      literal = literal + w.scaled(epsN * GaussQ(2));
    }
    std::string detail = lhs == literal ? "literal form without delta also matches"
                                        : "literal form without delta does not match";
    rep.checks.push_back(equal_check(tag + " tr J T^{N-1}", lhs, corrected, lhs == corrected ? detail : ""));
  }
  // (3)
  {
    GaussForm lhs = to_gauss(wedge(t.Omega.times_right(t.J), wedge_power(T, N - 2)).trace());
    GaussForm rhs = N == 2 ? w.scaled(GaussQ(-2)) : GaussForm(n, 2 * N - 2, 1);
    rep.checks.push_back(equal_check(tag + " tr Omega J T^{N-2}", lhs, rhs));
  }
  return rep;
}

namespace {

void check_parity_args(int N, int k) {
  if (N < 2 || N % 2 != 0) throw UsageError("parity counts need an even N >= 2");
  if (k < 1) throw UsageError("parity counts need k >= 1");
}

}  // namespace

long parity_count(int N, int k, ParityVariant variant) {
  check_parity_args(N, k);
  const int total = variant == ParityVariant::one ? N - k : variant == ParityVariant::two ? N - 1 - k : N - 2 - k;
  if (total < 0) return 0;
  std::vector<int> a(k + 1, 0);
  long count = 0;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == k) {
      a[k] = left;
      bool ok = true;
      if (variant == ParityVariant::three) {
        ok = a[0] % 2 == 0;
        for (int j = 1; j <= k && ok; ++j) ok = a[j] % 2 == 1;
      } else {
        const int ends = a[0] + a[k];
        ok = variant == ParityVariant::one ? ends % 2 == 1 : ends % 2 == 0;
        for (int j = 1; j < k && ok; ++j) ok = a[j] % 2 == 1;
      }
      count += ok;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      a[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, total);
  return count;
}

long parity_closed_form(int N, int k, ParityVariant variant) {
  check_parity_args(N, k);
  auto C = [](long n, long r) { return binomial(n, r).to_long(); };
  const long h = N / 2;
  switch (variant) {
    case ParityVariant::one: return 2 * C(h, k);
    case ParityVariant::two: return C(h, k) + C(h - 1, k);
    case ParityVariant::three: return C(h - 1, k);
  }
  return 0;
}

}  // namespace etaforge
