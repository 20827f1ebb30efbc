#pragma once

#include <stdexcept>
#include <string>

namespace pmw {

// Base for every error raised by the library. Callers that only care about
// "something was invalid" can catch this one.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class InvalidState : public Error {
 public:
  using Error::Error;
};

class DuplicateRole : public Error {
 public:
  using Error::Error;
};

class UnknownRole : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class LayoutMismatch : public Error {
 public:
  using Error::Error;
};

class SingularSpectralDensity : public Error {
 public:
  using Error::Error;
};

class CutoffTooSmall : public Error {
 public:
  using Error::Error;
};

class IntegrationUnstable : public Error {
 public:
  IntegrationUnstable(const std::string& what, double time)
      : Error(what), time_(time) {}

  /// Dimensionless time Omega*t at which the diagnostic tripped.
  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace pmw
