#ifndef ISGX_ERROR_HPP
#define ISGX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace isgx {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input data: mismatched ground sets, inconsistent tables, bad shapes.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A value lies materially outside the ideal/domain it must belong to.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configurable budget (closure size, iteration count) was exhausted.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Scenario files that cannot be parsed into domain objects.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace isgx

#endif  // ISGX_ERROR_HPP
