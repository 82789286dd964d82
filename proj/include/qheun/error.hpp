#pragma once

#include <stdexcept>
#include <string>

namespace qheun {

// Domain error codes. The CLI maps these to exit code 1 and a JSON report
// on stderr; everything else (bad flags, malformed rationals) is a usage
// error and exits 2.
enum class Errc {
  ZeroPolynomial,
  NotPolynomial,
  LeadingCoeffVanishes,
  LeadingZeroAt,
  UnboundParameter,
  WrongShape,
  DegreeDefect,
  InsufficientMoments,
  MomentSystemSingular,
  SImaginary,
  InvalidG1,
  BetaOutOfRange,
  NonfinitePotential,
  NoConvergence,
  DegeneratePsi,
  MismatchedProblems,
  ResidualNonzero,
  BadInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace qheun
