#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fullerene {

// Every library failure derives from Error. The three intermediate classes
// map onto the CLI exit codes (2 input/domain, 3 I/O, 4 resource limit).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class InfeasibleN : public InputError {
 public:
  explicit InfeasibleN(int n)
      : InputError("infeasible atom count n=" + std::to_string(n) +
                   " (must be 20 or an even number >= 24)"),
        n_(n) {}
  int n() const noexcept { return n_; }

 private:
  int n_;
};

/// Winding a face spiral failed at 1-based face position `step`.
class InvalidSpiral : public InputError {
 public:
  InvalidSpiral(int step, const std::string& why)
      : InputError("invalid spiral at face " + std::to_string(step) + ": " + why),
        step_(step) {}
  int step() const noexcept { return step_; }

 private:
  int step_;
};

class NotSpiralable : public InputError {
 public:
  using InputError::InputError;
};

class OrderMismatch : public InputError {
 public:
  using InputError::InputError;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class NoCompleteClusterization : public InputError {
 public:
  NoCompleteClusterization(const std::string& why, std::pair<int, int> evidence)
      : InputError(why), evidence_(evidence) {}
  /// Isomer indices of a pair that no admissible degree separates.
  std::pair<int, int> evidence() const noexcept { return evidence_; }

 private:
  std::pair<int, int> evidence_;
};

class OddDegreeRejected : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class IndexOutOfRange : public InputError {
 public:
  using InputError::InputError;
};

class NegativeEnergy : public InputError {
 public:
  using InputError::InputError;
};

class DegenerateInput : public InputError {
 public:
  using InputError::InputError;
};

/// A log transform was requested for a nonpositive value.
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

class IncompleteEnergies : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace fullerene
