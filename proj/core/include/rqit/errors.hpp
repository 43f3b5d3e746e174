#pragma once

#include <stdexcept>
#include <string>

namespace rqit {

// All library failures derive from Error so callers can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: invalid factor index, dimension mismatch, out-of-range parameter.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Tensor product would exceed the configured entry cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Eigenvalue below the PSD clamp threshold.
class NotPsdError : public Error {
 public:
  using Error::Error;
};

// Fock cutoff too small for the requested truncation tolerance.
class TruncationError : public Error {
 public:
  using Error::Error;
};

class InvalidBlochError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// Evaluation at or too close to a coordinate singularity or the pure-state boundary.
class DomainError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

}  // namespace rqit
