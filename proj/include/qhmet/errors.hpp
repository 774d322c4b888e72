#pragma once

#include <stdexcept>
#include <string>

namespace qhmet {

/// A query point is not an interior point of the domain.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the admissible range of a scalar function.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A segment leaves the domain.
class ContainmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The mesh graph does not connect the two query points.
class ConnectivityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedPairError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RegistryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qhmet
