#pragma once

#include <stdexcept>
#include <string>

namespace vacua {

// Every failure mode carries a stable kind tag so callers (and the CLI exit
// code logic) can dispatch without parsing messages.
enum class ErrorKind {
  InvalidParameter,
  SingularPoint,
  OnShellPole,
  ResonancePole,
  DivergentRenormalization,
  NonDecayingIntegrand,
  ToleranceNotMet,
  BranchOutOfRange,
  ResummationPole,
  GeometricPole,
  SeriesDiverging,
  MissingKernel,
  MatrixSingular,
  PackingTooDense,
  MissingCutoff,
  OverCritical,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  // Parameter errors map to CLI exit code 2, numerical failures to 3.
  bool is_parameter_error() const {
    return kind_ == ErrorKind::InvalidParameter || kind_ == ErrorKind::MissingCutoff ||
           kind_ == ErrorKind::MissingKernel || kind_ == ErrorKind::BranchOutOfRange;
  }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_error(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace vacua
