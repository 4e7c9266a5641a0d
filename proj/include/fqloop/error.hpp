#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fqloop {

enum class ErrorKind {
  Malformed,
  NotLatin,
  NotLoop,
  NotDiassociative,
  NotNormal,
  GroupTooLarge,
  SearchTooLarge,
  NotNKLoop,
  CarrierMismatch,
  ConditionFViolated,
  ImagesNotCommuting,
  ImagesNotSpecial,
  DegreeOverflow,
  PolyParse,
  InvalidForm,
  NoneFound,
  NotInClassM,
  NotNuclearlyPointed,
  ConstructionInvalid,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this type; `kind()` is stable
/// and is what the CLI prints as the error name.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fqloop
