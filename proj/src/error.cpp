#include "hwz/error.hpp"

namespace hwz {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Pole: return "PoleError";
    case ErrorKind::Range: return "RangeError";
    case ErrorKind::ZeroPair: return "ZeroPair";
    case ErrorKind::OutOfRegime: return "OutOfRegime";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::Internal: return "InternalError";
    case ErrorKind::Parity: return "ParityError";
    case ErrorKind::BoundViolation: return "BoundViolation";
    case ErrorKind::DegenerateAngle: return "DegenerateAngle";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::WrongExample: return "WrongExample";
    case ErrorKind::Branch: return "BranchError";
    case ErrorKind::Puncture: return "PunctureError";
    case ErrorKind::Residual: return "ResidualError";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Error";
}

}  // namespace hwz
