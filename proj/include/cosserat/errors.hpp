#ifndef COSSERAT_ERRORS_HPP
#define COSSERAT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cosserat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition (symmetry class, rotation, range).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A material or criterion parameter lies outside its admissible domain.
class ParameterDomainError : public Error {
 public:
  using Error::Error;
};

/// A gradient was requested where it does not exist (q or q_s below the floor).
class SingularGradient : public Error {
 public:
  using Error::Error;
};

/// The Lode-angle gradient is unbounded at a corner of the deviatoric section.
class CornerSingularity : public Error {
 public:
  using Error::Error;
};

/// Return mapping or path integration failed to converge.
class IntegrationError : public Error {
 public:
  explicit IntegrationError(const std::string& what, std::size_t step = npos)
      : Error(what), step_(step) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Index of the user increment that failed, or npos when unknown.
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// The converged plastic multiplier increment is not positive.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed or invalid run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace cosserat

#endif  // COSSERAT_ERRORS_HPP
