#include "ydhopf/error.hpp"

namespace ydhopf {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorKind::NoSuchRoot: return "NoSuchRoot";
    case ErrorKind::EmptyOrderList: return "EmptyOrderList";
    case ErrorKind::MismatchedGroup: return "MismatchedGroup";
    case ErrorKind::MismatchedContext: return "MismatchedContext";
    case ErrorKind::GradingActionClash: return "GradingActionClash";
    case ErrorKind::NonCommutingAction: return "NonCommutingAction";
    case ErrorKind::WrongActionOrder: return "WrongActionOrder";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnboundGenerator: return "UnboundGenerator";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::AxiomFailure: return "AxiomFailure";
    case ErrorKind::NotYDMorphism: return "NotYDMorphism";
    case ErrorKind::NoAntipode: return "NoAntipode";
    case ErrorKind::NonInvertibleAntipode: return "NonInvertibleAntipode";
    case ErrorKind::NonSymmetricBraiding: return "NonSymmetricBraiding";
    case ErrorKind::ModuleAxiomFailure: return "ModuleAxiomFailure";
    case ErrorKind::BasisCapExceeded: return "BasisCapExceeded";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace ydhopf
