#include "moyal/errors.hpp"

namespace moyal {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::NotGammaAdicUnit: return "NotGammaAdicUnit";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownSymbol: return "UnknownSymbol";
    case Errc::NegativeExponent: return "NegativeExponent";
    case Errc::NonTerminatingSeries: return "NonTerminatingSeries";
    case Errc::HbarDependentInput: return "HbarDependentInput";
    case Errc::ResidualHbarPole: return "ResidualHbarPole";
    case Errc::SingularDenominator: return "SingularDenominator";
    case Errc::ExactnessFailure: return "ExactnessFailure";
    case Errc::NonPolynomialAntiderivative: return "NonPolynomialAntiderivative";
    case Errc::HbarDependentT: return "HbarDependentT";
    case Errc::TracePlusTwoSingular: return "TracePlusTwoSingular";
    case Errc::UnsupportedExponentDegree: return "UnsupportedExponentDegree";
    case Errc::UnsupportedIntegrand: return "UnsupportedIntegrand";
    case Errc::HbarResidue: return "HbarResidue";
    case Errc::NotCanonical: return "NotCanonical";
    case Errc::IncompatibleOperands: return "IncompatibleOperands";
    case Errc::JsonFormat: return "JsonFormat";
  }
  return "Unknown";
}

ParseError::ParseError(Errc code, std::size_t offset, std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      offset_(offset),
      line_(line),
      column_(column),
      message_(message) {}

}  // namespace moyal
