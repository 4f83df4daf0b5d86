#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hwz {

enum class ErrorKind {
  Pole,
  Range,
  ZeroPair,
  OutOfRegime,
  InvalidLabel,
  Internal,
  Parity,
  BoundViolation,
  DegenerateAngle,
  Domain,
  WrongExample,
  Branch,
  Puncture,
  Residual,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Every failure the library reports. Internal, Parity and Residual signal a
// broken invariant (a result the mathematics says cannot happen); the rest
// are caller-side domain errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  bool is_invariant_breach() const noexcept {
    return kind_ == ErrorKind::Internal || kind_ == ErrorKind::Parity ||
           kind_ == ErrorKind::Residual;
  }

 private:
  ErrorKind kind_;
};

}  // namespace hwz
