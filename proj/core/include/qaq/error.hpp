#ifndef QAQ_ERROR_HPP
#define QAQ_ERROR_HPP

#include <array>
#include <stdexcept>
#include <string>

namespace qaq {

enum class ErrorKind {
  OutOfRange,
  AxiomViolation,
  NonUnitParameter,
  NotAGroup,
  ParseError,
  ArcConsistency,
  OrientationAmbiguous,
  UnbalancedCrossing,
  UnknownName,
  CapExceeded,
  OracleTooLarge,
  TooLarge,
  LabelNotPresent,
  MalformedPolynomial,
  NotEndomorphism,
};

// Exit-code buckets used by the CLI: 1 input error, 2 cap/limit, 3 internal.
enum class ErrorClass { Input = 1, Limit = 2, Internal = 3 };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  ErrorClass cls() const noexcept {
    switch (kind_) {
      case ErrorKind::CapExceeded:
      case ErrorKind::OracleTooLarge:
      case ErrorKind::TooLarge:
        return ErrorClass::Limit;
      default:
        return ErrorClass::Input;
    }
  }

private:
  ErrorKind kind_;
};

// Raised by quandle validation; carries the failing axiom (1 = idempotence,
// 2 = right-invertibility, 3 = self-distributivity) and a witness.
class AxiomViolation : public Error {
public:
  AxiomViolation(int axiom, std::array<int, 3> witness, const std::string& message)
      : Error(ErrorKind::AxiomViolation, message), axiom_(axiom), witness_(witness) {}

  int axiom() const noexcept { return axiom_; }
  const std::array<int, 3>& witness() const noexcept { return witness_; }

private:
  int axiom_;
  std::array<int, 3> witness_;
};

}  // namespace qaq

#endif
