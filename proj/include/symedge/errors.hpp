#ifndef SYMEDGE_ERRORS_HPP
#define SYMEDGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symedge {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two operands live in polynomial rings with a different number of variables.
class AmbientMismatchError : public Error {
public:
  explicit AmbientMismatchError(const std::string& what) : Error(what) {}
};

/// A configured cap (degree, vertex count, subset count, generator count) was exceeded.
class CapExceededError : public Error {
public:
  explicit CapExceededError(const std::string& what) : Error(what) {}
};

/// Invalid argument: index out of range, non-prime characteristic, bad parameter combination.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Malformed text input (monomial, ideal, or graph file).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// The splitting construction was requested at its excluded parameter r = m-s-1.
class ExcludedParameterError : public DomainError {
public:
  explicit ExcludedParameterError(const std::string& what) : DomainError(what) {}
};

/// An iterated splitting ran into the excluded parameter before terminating.
class ChainBrokenError : public Error {
public:
  ChainBrokenError(const std::string& what, int blocking_r)
      : Error(what), blocking_r_(blocking_r) {}
  int blocking_r() const { return blocking_r_; }

private:
  int blocking_r_;
};

/// A Betti table arrived in the wrong convention for the requested operation.
class ConventionError : public Error {
public:
  explicit ConventionError(const std::string& what) : Error(what) {}
};

/// The resolution does not end in the homological row the operation requires.
class ProjectiveDimensionError : public Error {
public:
  explicit ProjectiveDimensionError(const std::string& what) : Error(what) {}
};

}  // namespace symedge

#endif  // SYMEDGE_ERRORS_HPP
