#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ydhopf {

enum class ErrorKind {
  NonPrimeModulus,
  NoSuchRoot,
  EmptyOrderList,
  MismatchedGroup,
  MismatchedContext,
  GradingActionClash,
  NonCommutingAction,
  WrongActionOrder,
  InvalidArgument,
  ParseError,
  UnboundGenerator,
  TypeMismatch,
  ShapeMismatch,
  RankDeficient,
  Inconsistent,
  AxiomFailure,
  NotYDMorphism,
  NoAntipode,
  NonInvertibleAntipode,
  NonSymmetricBraiding,
  ModuleAxiomFailure,
  BasisCapExceeded,
  FormatError,
  IoError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }

  // Sub-expression path for TypeMismatch/UnboundGenerator.
  std::string path;
  // Computed rank for RankDeficient.
  std::size_t rank = 0;

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace ydhopf
