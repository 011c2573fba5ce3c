#ifndef LACUNARY_ERROR_HPP
#define LACUNARY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lacunary {

enum class ErrorCode {
  ZeroPolynomial,
  NotDivisible,
  NotAPolynomial,
  ZeroConstantTerm,
  NotAPolynomialOfPositiveDegree,
  HypothesisViolation,
  UnsupportedDegreePattern,
  BelowThreshold,
  ConstructionFailed,
  ParseError,
  InvalidArgument,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotAPolynomial: return "NotAPolynomial";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::NotAPolynomialOfPositiveDegree: return "NotAPolynomialOfPositiveDegree";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::UnsupportedDegreePattern: return "UnsupportedDegreePattern";
    case ErrorCode::BelowThreshold: return "BelowThreshold";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures additionally remember the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::ParseError, "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lacunary

#endif  // LACUNARY_ERROR_HPP
