#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etaforge/cohomology.hpp"
#include "etaforge/hodge.hpp"
#include "etaforge/quad_surd.hpp"

namespace etaforge {

enum class EigTag { type1, type2plus, type2minus };
std::string to_string(EigTag t);

struct EigRecord {
  QuadSurd value;
  long multiplicity = 1;
  EigTag tag = EigTag::type1;
  long k = 0;
  int p = 0;
  std::optional<Rational> muSq;
};

struct DolbeaultEntry {
  long k = 0;
  int p = 0;
  Rational muSq;  // mu^2; the Laplacian eigenvalue is mu^2/2
  long e = 0;     // multiplicity of mu^2/2 on (0,p)-forms
};

/// Nonzero Dolbeault Laplacian eigenvalues with multiplicities, plus a lower
/// bound M for the smallest positive eigenvalue mu^2/2.
class DolbeaultProvider {
 public:
  DolbeaultProvider() = default;
  DolbeaultProvider(std::vector<DolbeaultEntry> entries, Rational M);
  /// No eigenvalue data, only the declared bound.
  static DolbeaultProvider bound_only(Rational M);

  const std::vector<DolbeaultEntry>& entries() const { return entries_; }
  const Rational& M() const { return M_; }
  long e(long k, int p, const Rational& muSq) const;

 private:
  std::vector<DolbeaultEntry> entries_;
  Rational M_{1};
};

struct KRange {
  long kMin = 0;
  long kMax = 0;
};

/// lambda = (-1)^p (k + eps (p - m/2) - r), multiplicity h^{p,k}; zero multiplicities are skipped.
std::vector<EigRecord> type1_eigenvalues(const Geometry& g, const HodgeProvider& hp, const Rational& r,
                                         const Rational& eps, KRange kr);

/// Eigenvalues of [[A, mu sqrt(eps)], [mu sqrt(eps), B]] with
/// A = (-1)^p (k + eps(p - m/2) - r), B = (-1)^{p+1} (k + eps(p+1-m/2) - r).
std::pair<QuadSurd, QuadSurd> type2_eigenvalues(long k, int p, const Rational& muSq, const Rational& r,
                                                const Rational& eps, int m);
/// Discriminant (2k + eps(2p - m + 1) - 2r)^2 + 4 mu^2 eps of the block above.
Rational type2_discriminant(long k, int p, const Rational& muSq, const Rational& r, const Rational& eps, int m);

/// d = e^p - e^{p-1} + ... + (-1)^p e^0; negative values raise InvalidDolbeaultData.
long alternating_multiplicity(const DolbeaultProvider& provider, long k, int p, const Rational& muSq);

std::vector<EigRecord> type2_records(const DolbeaultProvider& provider, const Rational& r, const Rational& eps,
                                     int m, KRange kr);

/// Type 1 and (when a provider is given) type 2 records, sorted by value.
std::vector<EigRecord> dirac_spectrum(const Geometry& g, const HodgeProvider& hp, const Rational& r,
                                      const Rational& eps, KRange kr,
                                      const DolbeaultProvider* provider = nullptr);

long kernel_dimension(const Geometry& g, const HodgeProvider& hp, const Rational& r, const Rational& eps);

/// eps/8 < M
bool validate_epsilon(const Rational& eps, const DolbeaultProvider& provider);

/// sum of mult * sign(lambda) |lambda|^{-s} over the `cutoff` nonzero records of smallest |lambda|.
double finite_eta_partial(const std::vector<EigRecord>& records, double s, std::size_t cutoff);

}  // namespace etaforge
