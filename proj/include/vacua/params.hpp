#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "vacua/errors.hpp"

namespace vacua {

// Internal unit system: hbar = c = eps0 = 1, frequencies in units of omega0,
// lengths in units of c/omega0, so the resonant wavenumber k0 = 1.  In these
// units every formula collapses to the dimensionless groups (g, zeta0,
// rho_bar, x) and the dipole strength is fixed by the linewidth:
//   mu^2/(eps0 hbar) = 3 pi g   (from Gamma0 = k0^3 mu^2 / 3 pi eps0 hbar).
struct DipoleSpecies {
  double gamma_ratio = 1e-6;  // g = Gamma0/omega0
  double cutoff = 1e5;        // UV cutoff Lambda/omega0 for free-space Lamb integrals

  double mu2() const { return 3.0 * M_PI * gamma_ratio; }  // derived, never set

  void validate() const;
};

enum class CorrelationModel { HardSphere, HardSphereOverdensity };

struct MediumSpec {
  double rho_bar = 1e-3;  // rho xi^3
  double zeta0 = 0.1;     // k0 xi
  CorrelationModel correlation = CorrelationModel::HardSphere;
  double overdensity_c = 0.0;  // coordination amplitude C (overdensity model only)

  double xi() const { return zeta0; }                  // correlation length, units c/omega0
  double rho() const { return rho_bar / (zeta0 * zeta0 * zeta0); }  // number density, (omega0/c)^3

  void validate() const;
  // Effective-medium formulas assume zeta0 << 1; callers that require it use this.
  void require_effective_medium_regime() const;
};

struct DimensionlessGroups {
  double g;
  double zeta0;
  double rho_bar;
  double x;            // rho mu^2/(hbar eps0 omega0) = 3 pi g rho_bar / zeta0^3
  double recur_ratio;  // (g / zeta0^3)^2
};

DimensionlessGroups derive_groups(const DipoleSpecies& species, const MediumSpec& medium);

}  // namespace vacua
