#pragma once

#include <stdexcept>
#include <string>

namespace ramopuc {

/// Root of every library exception.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's domain (M = 0, duplicate
// Kronecker orders, non-prime family parameter, malformed text...). The CLI
// maps these to exit code 2.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A mathematical check failed. The CLI maps these to exit code 1.
class VerificationError : public Error {
 public:
  using Error::Error;
};

class NonzeroRemainder : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class DegreeExceedsBound : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InsufficientMoments : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Some Toeplitz determinant Δ_k ≤ 0: the moments do not come from a
/// positive measure with enough support points.
class SingularMoment : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

/// |a_N| ≠ 1 where a closed para-orthogonal system was requested.
class TerminalMass : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

/// Inverse Szegő descent hit |Φ_{n+1}(0)| = 1.
class UnimodularConstantTerm : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class InvalidCharacteristic : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class InteriorCoefficientOutOfRange : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class DualityViolation : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class WeightCheckFailure : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

/// Two independent computations disagreed. Always an implementation bug.
class InternalInconsistency : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

}  // namespace ramopuc
