#pragma once

#include <stdexcept>
#include <string>

namespace etaforge {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

/// Caller violated an operation's contract (mismatched orders, bad arguments).
class UsageError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "UsageError"; }
};

/// Mathematical domain violation (e.g. exp of a series with nonzero constant term).
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DomainError"; }
};

/// A Hodge number lies in a range where it depends on moduli and no value was supplied.
class UnknownHodgeData : public Error {
 public:
  UnknownHodgeData(int p, long k, const std::string& why)
      : Error("unknown Hodge number h^{" + std::to_string(p) + "," + std::to_string(k) + "}: " + why),
        p_(p),
        k_(k) {}
  const char* kind() const noexcept override { return "UnknownHodgeData"; }
  int p() const noexcept { return p_; }
  long k() const noexcept { return k_; }

 private:
  int p_;
  long k_;
};

/// A Hodge provider produced values contradicting its own vanishing claims.
class ProviderConsistencyError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ProviderConsistencyError"; }
};

/// Dolbeault multiplicities that cannot come from an actual Laplacian spectrum.
class InvalidDolbeaultData : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InvalidDolbeaultData"; }
};

class NoConsistentConvention : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "NoConsistentConvention"; }
};

/// Quadrature or other floating-point procedure failed to reach its tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "NumericalError"; }
};

}  // namespace etaforge
