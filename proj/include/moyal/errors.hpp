#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace moyal {

enum class Errc {
  InvalidArgument,
  ZeroDenominator,
  NotGammaAdicUnit,
  SyntaxError,
  UnknownSymbol,
  NegativeExponent,
  NonTerminatingSeries,
  HbarDependentInput,
  ResidualHbarPole,
  SingularDenominator,
  ExactnessFailure,
  NonPolynomialAntiderivative,
  HbarDependentT,
  TracePlusTwoSingular,
  UnsupportedExponentDegree,
  UnsupportedIntegrand,
  HbarResidue,
  NotCanonical,
  IncompatibleOperands,
  JsonFormat,
};

std::string_view errc_name(Errc code) noexcept;

/// Base of every structured failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parser failure carrying the byte offset and its 1-based line/column.
/// what() is formatted as "line:col: message".
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t offset, std::size_t line, std::size_t column,
             const std::string& message);

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace moyal
