#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lsys {

enum class Errc {
  EmptyMeasure,
  InvalidMeasure,
  RealAxisEvaluation,
  PoleAtCayleyCenter,
  MoebiusPole,
  NotCentered,
  NotHerglotz,
  NotDonoghueNormalized,
  DegenerateDeficiencyPairing,
  DimensionMismatch,
  NotUnimodular,
  ParameterOutOfRange,
  UnsupportedCombination,
  DegeneratePoint,
  UnknownClosedForm,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lsys
