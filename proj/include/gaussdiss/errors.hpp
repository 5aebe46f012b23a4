#pragma once

#include <stdexcept>
#include <string>

namespace gaussdiss {

// Input outside the mathematical domain of an operation (negative nu, t < 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A determinant below the Heisenberg bound 1/4.
class UncertaintyViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An analytically impossible intermediate value; indicates a bug, not a physical regime.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Characteristic time requested for a channel without dissipation (k = 0).
class UndefinedTimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Fock truncation too small to hold the requested state.
class DimensionTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Trace drift or truncation breach during numeric integration.
class IntegrationFailure : public std::runtime_error {
 public:
  IntegrationFailure(const std::string& what, double time)
      : std::runtime_error(what + " at t=" + std::to_string(time)), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

// Density matrix with an eigenvalue below -1e-9.
class PsdViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request exceeds a hard size limit (grid samples, oracle dimension).
class ResourceLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace gaussdiss
