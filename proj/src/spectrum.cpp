#include "etaforge/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "etaforge/errors.hpp"

namespace etaforge {

std::string to_string(EigTag t) {
  switch (t) {
    case EigTag::type1: return "type1";
    case EigTag::type2plus: return "type2plus";
    case EigTag::type2minus: return "type2minus";
  }
  return "?";
}

DolbeaultProvider::DolbeaultProvider(std::vector<DolbeaultEntry> entries, Rational M)
    : entries_(std::move(entries)), M_(std::move(M)) {
  if (M_.sign() <= 0) throw InvalidDolbeaultData("lower bound M must be positive");
  for (const auto& en : entries_) {
    if (en.muSq.sign() <= 0) throw InvalidDolbeaultData("mu^2 must be positive");
    if (en.e < 0) throw InvalidDolbeaultData("negative multiplicity");
    if (M_ > en.muSq / Rational(2))
      throw InvalidDolbeaultData("declared M = " + M_.str() + " exceeds the eigenvalue mu^2/2 = " +
                                 (en.muSq / Rational(2)).str());
  }
}

DolbeaultProvider DolbeaultProvider::bound_only(Rational M) { return DolbeaultProvider({}, std::move(M)); }

long DolbeaultProvider::e(long k, int p, const Rational& muSq) const {
  long total = 0;
  for (const auto& en : entries_)
    if (en.k == k && en.p == p && en.muSq == muSq) total += en.e;
  return total;
}

static Rational sign_pow(int p) { return p % 2 == 0 ? Rational(1) : Rational(-1); }

std::vector<EigRecord> type1_eigenvalues(const Geometry& g, const HodgeProvider& hp, const Rational& r,
                                         const Rational& eps, KRange kr) {
  if (eps.sign() <= 0) throw UsageError("eps must be positive");
  const Rational half_m(g.m, 2);
  std::vector<EigRecord> out;
  for (long k = kr.kMin; k <= kr.kMax; ++k) {
    for (int p = 0; p <= g.m; ++p) {
      long h = hp.hodge_number(p, k);
      if (h == 0) continue;
      EigRecord rec;
      rec.value = QuadSurd(sign_pow(p) * (Rational(k) + eps * (Rational(p) - half_m) - r));
      rec.multiplicity = h;
      rec.tag = EigTag::type1;
      rec.k = k;
      rec.p = p;
      out.push_back(rec);
    }
  }
  return out;
}

Rational type2_discriminant(long k, int p, const Rational& muSq, const Rational& r, const Rational& eps, int m) {
  Rational lin = Rational(2 * k) + eps * Rational(2 * p - m + 1) - Rational(2) * r;
  return lin * lin + Rational(4) * muSq * eps;
}

std::pair<QuadSurd, QuadSurd> type2_eigenvalues(long k, int p, const Rational& muSq, const Rational& r,
                                                const Rational& eps, int m) {
  if (muSq.sign() <= 0) throw UsageError("mu^2 must be positive");
  if (eps.sign() <= 0) throw UsageError("eps must be positive");
  const Rational half_trace = -sign_pow(p) * eps / Rational(2);
  const Rational disc = type2_discriminant(k, p, muSq, r, eps, m);
  return {QuadSurd(half_trace, Rational(1, 2), disc), QuadSurd(half_trace, Rational(-1, 2), disc)};
}

long alternating_multiplicity(const DolbeaultProvider& provider, long k, int p, const Rational& muSq) {
  long d = 0;
  for (int q = 0; q <= p; ++q) d += ((p - q) % 2 == 0 ? 1 : -1) * provider.e(k, q, muSq);
  if (d < 0)
    throw InvalidDolbeaultData("alternating multiplicity d^{" + std::to_string(p) + "," + std::to_string(k) +
                               "} = " + std::to_string(d) + " < 0 at mu^2 = " + muSq.str());
  return d;
}

std::vector<EigRecord> type2_records(const DolbeaultProvider& provider, const Rational& r, const Rational& eps,
                                     int m, KRange kr) {
  std::set<std::tuple<long, int, Rational>> keys;
  for (const auto& en : provider.entries())
    if (en.k >= kr.kMin && en.k <= kr.kMax) keys.insert({en.k, en.p, en.muSq});
  // the block pairs (0,p) with (0,p+1) forms, so p runs over 0..m-1
  std::set<std::tuple<long, int, Rational>> blocks;
  for (const auto& [k, p, mu] : keys)
    for (int q = p; q < m; ++q) blocks.insert({k, q, mu});
  std::vector<EigRecord> out;
  for (const auto& [k, p, mu] : blocks) {
    long d = alternating_multiplicity(provider, k, p, mu);
    if (d == 0) continue;
    auto [plus, minus] = type2_eigenvalues(k, p, mu, r, eps, m);
    out.push_back(EigRecord{plus, d, EigTag::type2plus, k, p, mu});
    out.push_back(EigRecord{minus, d, EigTag::type2minus, k, p, mu});
  }
  return out;
}

std::vector<EigRecord> dirac_spectrum(const Geometry& g, const HodgeProvider& hp, const Rational& r,
                                      const Rational& eps, KRange kr, const DolbeaultProvider* provider) {
  auto out = type1_eigenvalues(g, hp, r, eps, kr);
  if (provider) {
    auto t2 = type2_records(*provider, r, eps, g.m, kr);
    out.insert(out.end(), t2.begin(), t2.end());
  }
  std::stable_sort(out.begin(), out.end(), [](const EigRecord& x, const EigRecord& y) {
    int c = QuadSurd::compare(x.value, y.value);
    if (c != 0) return c < 0;
    return std::tie(x.k, x.p) < std::tie(y.k, y.p);
  });
  return out;
}

long kernel_dimension(const Geometry& g, const HodgeProvider& hp, const Rational& r, const Rational& eps) {
  if (eps.sign() <= 0) throw UsageError("eps must be positive");
  long total = 0;
  for (int p = 0; p <= g.m; ++p) {
    Rational k = r - eps * (Rational(p) - Rational(g.m, 2));
    if (!k.is_integer()) continue;
    total += hp.hodge_number(p, k.to_long());
  }
  return total;
}

bool validate_epsilon(const Rational& eps, const DolbeaultProvider& provider) {
  return eps / Rational(8) < provider.M();
}

double finite_eta_partial(const std::vector<EigRecord>& records, double s, std::size_t cutoff) {
  if (s <= 0) throw UsageError("s must be positive");
  std::vector<const EigRecord*> nz;
  for (const auto& r : records)
    if (r.value.sign() != 0) nz.push_back(&r);
  std::stable_sort(nz.begin(), nz.end(), [](const EigRecord* x, const EigRecord* y) {
    return QuadSurd::compare(x->value.abs(), y->value.abs()) < 0;
  });
  if (nz.size() > cutoff) nz.resize(cutoff);
  double total = 0;
  for (const auto* r : nz) {
    double v = r->value.to_double();
    total += static_cast<double>(r->multiplicity) * (v > 0 ? 1.0 : -1.0) * std::pow(std::abs(v), -s);
  }
  return total;
}

}  // namespace etaforge
