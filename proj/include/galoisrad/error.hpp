#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace galoisrad {

enum class Errc {
  DivisionByZero,
  ImaginaryResidue,
  DegreeTooLarge,
  ConvergenceFailure,
  NotSymmetric,
  UnsupportedDegree,
  UnsupportedSize,
  MalformedCycleString,
  PointOutOfRange,
  NotASubgroup,
  NotNormal,
  GroupTooLarge,
  DegenerateConstraint,
  AlreadyBinomial,
  NoCandidateSurvives,
  NotPrime,
  NotSquarefree,
  ExhaustedCandidates,
  ClusterAmbiguity,
  AlphaCollision,
  DivisionByZeroAtEval,
  ParseError,
  InvalidArgument,
  InvariantViolation,
};

std::string_view errc_name(Errc code) noexcept;

/// Single exception type for every library failure; the code says which.
class MathError : public std::runtime_error {
 public:
  MathError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parser failure carrying the 0-based offset of the offending character.
class ParseError : public MathError {
 public:
  ParseError(std::size_t position, const std::string& what)
      : MathError(Errc::ParseError, "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw MathError(code, what); }

}  // namespace galoisrad
