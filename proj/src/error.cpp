#include "lsys/error.hpp"

namespace lsys {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyMeasure: return "EmptyMeasure";
    case Errc::InvalidMeasure: return "InvalidMeasure";
    case Errc::RealAxisEvaluation: return "RealAxisEvaluation";
    case Errc::PoleAtCayleyCenter: return "PoleAtCayleyCenter";
    case Errc::MoebiusPole: return "MoebiusPole";
    case Errc::NotCentered: return "NotCentered";
    case Errc::NotHerglotz: return "NotHerglotz";
    case Errc::NotDonoghueNormalized: return "NotDonoghueNormalized";
    case Errc::DegenerateDeficiencyPairing: return "DegenerateDeficiencyPairing";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::UnsupportedCombination: return "UnsupportedCombination";
    case Errc::DegeneratePoint: return "DegeneratePoint";
    case Errc::UnknownClosedForm: return "UnknownClosedForm";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace lsys
