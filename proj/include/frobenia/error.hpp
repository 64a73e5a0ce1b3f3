#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobenia {

/// Machine-readable error codes. The CLI maps them onto exit codes and
/// reports the name in its error JSON.
enum class Errc {
  DivisionByZero,
  FieldMismatch,
  PrecisionExhausted,
  UnsupportedPrime,
  NegativeValuation,
  DimensionMismatch,
  Singular,
  FactorizationIncomplete,
  NotFrobenius,
  AlgebraMismatch,
  SplittingFailure,
  NotSplit,
  NoIntertwiner,
  NotEndomorphism,
  VerificationFailed,
  NotIntegralAtPrime,
  GroupTooLarge,
  InvalidMatrix,
  InvalidInput,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::UnsupportedPrime: return "UnsupportedPrime";
    case Errc::NegativeValuation: return "NegativeValuation";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::Singular: return "Singular";
    case Errc::FactorizationIncomplete: return "FactorizationIncomplete";
    case Errc::NotFrobenius: return "NotFrobenius";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::SplittingFailure: return "SplittingFailure";
    case Errc::NotSplit: return "NotSplit";
    case Errc::NoIntertwiner: return "NoIntertwiner";
    case Errc::NotEndomorphism: return "NotEndomorphism";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::NotIntegralAtPrime: return "NotIntegralAtPrime";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::InvalidMatrix: return "InvalidMatrix";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace frobenia
