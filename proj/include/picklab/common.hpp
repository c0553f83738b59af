#pragma once

#include <stdexcept>
#include <string>

namespace picklab {

enum class ErrorCode {
  NegativeWeight,
  OverlappingDensitySupports,
  NonIntegrableDensityExponent,
  UnsupportedIntegrand,
  CenterMismatch,
  NonUpperHalfPlaneArgument,
  SupportViolation,
  NotRegularToOrder,
  UnsupportedRep,
  GammaNotAdmissible,
  LambdaNotLittleO,
  HypothesisFailure,
  MomentDivergent,
  DegenerateArc,
  AssertionFailure,
  PrecisionExhausted,
  IncomparableRates,
  InvalidArgument,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Three-valued outcome shared by integrability checks and boundedness scans.
enum class Tag { Integrable, Divergent, Inconclusive };
enum class ScanVerdict { Bounded, Unbounded, Inconclusive };

const char* tag_name(Tag t);
const char* scan_verdict_name(ScanVerdict v);

}  // namespace picklab
