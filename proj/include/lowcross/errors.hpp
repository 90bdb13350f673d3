#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lowcross/types.hpp"

namespace lowcross {

/// Base class for recoverable library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition on indices or shapes.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Numerical parameter outside its admissible domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Instance does not meet an algorithm's stated requirement (e.g. m >= 34).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Sampling requested from a distribution with zero total mass.
class EmptyDistributionError : public Error {
 public:
  using Error::Error;
};

/// The edge weights of a partial-matching run reached zero before the
/// requested number of edges was drawn. Carries the edges drawn so far.
class InfeasibleSampleError : public Error {
 public:
  InfeasibleSampleError(const std::string& what, std::vector<Edge> partial)
      : Error(what), partial_(std::move(partial)) {}
  const std::vector<Edge>& partial() const { return partial_; }

 private:
  std::vector<Edge> partial_;
};

/// Malformed input file or dimension mismatch in user data.
class DataError : public Error {
 public:
  using Error::Error;
};

/// A brute-force oracle refused an instance above its size cap.
class RefusedError : public Error {
 public:
  using Error::Error;
};

}  // namespace lowcross
