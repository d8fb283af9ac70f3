#include "etaforge/flow.hpp"

#include <algorithm>

#include "etaforge/errors.hpp"

namespace etaforge {

namespace {

long to_l(const mpz_class& z) {
  if (!z.fits_slong_p()) throw UsageError("integer range exceeds machine size");
  return z.get_si();
}

long sum_h(const HodgeProvider& hp, int p, long from, long to) {
  long s = 0;
  for (long k = from; k <= to; ++k) s += hp.hodge_number(p, k);
  return s;
}

void sort_crossings(std::vector<Crossing>& c) {
  std::sort(c.begin(), c.end(), [](const Crossing& x, const Crossing& y) {
    if (x.parameterValue != y.parameterValue) return x.parameterValue < y.parameterValue;
    if (x.k != y.k) return x.k < y.k;
    return x.p < y.p;
  });
}

}  // namespace

FlowResult flow_in_s_oracle(const Geometry& g, const HodgeProvider& hp, const Rational& r0, const Rational& r1,
                            const Rational& eps) {
  if (!(r0 < r1)) throw UsageError("flow window needs r0 < r1");
  if (eps.sign() <= 0) throw UsageError("eps must be positive");
  FlowResult out;
  for (int p = 0; p <= g.m; ++p) {
    const Rational shift = eps * (Rational(p) - Rational(g.m, 2));
    const int direction = p % 2 == 0 ? -1 : 1;
    // s* = k + shift
    const long kLo = to_l((r0 - shift).ceil());
    const long kHi = to_l((r1 - shift).floor());
    for (long k = kLo; k <= kHi; ++k) {
      const Rational s = Rational(k) + shift;
      const bool inside = direction < 0 ? (s >= r0 && s < r1) : (s > r0 && s <= r1);
      if (!inside) continue;
      const long h = hp.hodge_number(p, k);
      if (h == 0) continue;
      out.crossings.push_back(Crossing{s, k, p, h, direction});
      out.net += direction * h;
    }
  }
  sort_crossings(out.crossings);
  return out;
}

long flow_in_delta_closed(const Geometry& g, const HodgeProvider& hp, const Rational& r, const Rational& eps) {
  if (eps.sign() <= 0) throw UsageError("eps must be positive");
  const Rational half_m(g.m, 2);
  const long fl_r = to_l(r.floor());
  const long ce_r = to_l(r.ceil());
  long total = 0;
  for (int p = 0; p <= g.m; ++p) {
    const Rational c = Rational(p) - half_m;
    if (c.is_zero()) continue;
    const Rational x = r - eps * c;
    const bool even = p % 2 == 0;
    if (c.sign() > 0) {
      if (even) total += sum_h(hp, p, to_l(x.ceil()), ce_r - 1);
      else total -= sum_h(hp, p, to_l(x.floor()) + 1, fl_r);
    } else {
      if (even) total -= sum_h(hp, p, ce_r, to_l(x.ceil()) - 1);
      else total += sum_h(hp, p, fl_r + 1, to_l(x.floor()));
    }
  }
  return total;
}

FlowResult flow_in_delta_oracle(const Geometry& g, const HodgeProvider& hp, const Rational& r, const Rational& eps) {
  if (eps.sign() <= 0) throw UsageError("eps must be positive");
  const Rational half_m(g.m, 2);
  FlowResult out;
  for (int p = 0; p <= g.m; ++p) {
    const Rational c = Rational(p) - half_m;
    if (c.is_zero()) continue;
    const int direction = (p % 2 == 0 ? 1 : -1) * c.sign();
    // delta* in [0, eps] <=> k between r and r - eps c
    const Rational a = r, b = r - eps * c;
    const long kLo = to_l(std::min(a, b).ceil());
    const long kHi = to_l(std::max(a, b).floor());
    for (long k = kLo; k <= kHi; ++k) {
      const Rational d = (r - Rational(k)) / c;
      const bool inside = direction > 0 ? (d.sign() > 0 && d <= eps) : (d.sign() >= 0 && d < eps);
      if (!inside) continue;
      const long h = hp.hodge_number(p, k);
      if (h == 0) continue;
      out.crossings.push_back(Crossing{d, k, p, h, direction});
      out.net += direction * h;
    }
  }
  sort_crossings(out.crossings);
  return out;
}

}  // namespace etaforge
