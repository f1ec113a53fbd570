#include "vacua/params.hpp"

#include <cmath>

namespace vacua {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::OnShellPole: return "OnShellPole";
    case ErrorKind::ResonancePole: return "ResonancePole";
    case ErrorKind::DivergentRenormalization: return "DivergentRenormalization";
    case ErrorKind::NonDecayingIntegrand: return "NonDecayingIntegrand";
    case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorKind::BranchOutOfRange: return "BranchOutOfRange";
    case ErrorKind::ResummationPole: return "ResummationPole";
    case ErrorKind::GeometricPole: return "GeometricPole";
    case ErrorKind::SeriesDiverging: return "SeriesDiverging";
    case ErrorKind::MissingKernel: return "MissingKernel";
    case ErrorKind::MatrixSingular: return "MatrixSingular";
    case ErrorKind::PackingTooDense: return "PackingTooDense";
    case ErrorKind::MissingCutoff: return "MissingCutoff";
    case ErrorKind::OverCritical: return "OverCritical";
  }
  return "UnknownError";
}

void DipoleSpecies::validate() const {
  if (!(gamma_ratio > 0.0))
    throw_error(ErrorKind::InvalidParameter, "g must be positive");
  if (gamma_ratio >= 0.1)
    throw_error(ErrorKind::InvalidParameter,
                "g = " + std::to_string(gamma_ratio) + " outside the perturbative regime (g < 0.1)");
  if (!(cutoff > 1.0))
    throw_error(ErrorKind::InvalidParameter, "cutoff must exceed omega0 (Lambda/omega0 > 1)");
}

void MediumSpec::validate() const {
  if (!(rho_bar > 0.0)) throw_error(ErrorKind::InvalidParameter, "rho_bar must be positive");
  if (!(zeta0 > 0.0)) throw_error(ErrorKind::InvalidParameter, "zeta0 must be positive");
  if (correlation == CorrelationModel::HardSphereOverdensity && !(overdensity_c > 0.0))
    throw_error(ErrorKind::InvalidParameter, "overdensity_c must be positive for the overdensity model");
}

void MediumSpec::require_effective_medium_regime() const {
  if (!(zeta0 < 1.0))
    throw_error(ErrorKind::InvalidParameter,
                "zeta0 = " + std::to_string(zeta0) + " outside the effective-medium regime (zeta0 < 1)");
}

DimensionlessGroups derive_groups(const DipoleSpecies& species, const MediumSpec& medium) {
  species.validate();
  medium.validate();
  DimensionlessGroups out;
  out.g = species.gamma_ratio;
  out.zeta0 = medium.zeta0;
  out.rho_bar = medium.rho_bar;
  const double z3 = medium.zeta0 * medium.zeta0 * medium.zeta0;
  out.x = 3.0 * M_PI * species.gamma_ratio * medium.rho_bar / z3;
  const double r = species.gamma_ratio / z3;
  out.recur_ratio = r * r;
  return out;
}

}  // namespace vacua
