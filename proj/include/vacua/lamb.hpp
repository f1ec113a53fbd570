#pragma once

#include <functional>
#include <map>
#include <optional>

#include "vacua/energy.hpp"
#include "vacua/params.hpp"
#include "vacua/phi.hpp"

namespace vacua {

// Ground-state Lamb shifts and vacuum-energy densities.  All frequency
// integrals run on the imaginary axis; the free-space pieces carry the sharp
// UV cutoff Lambda with the free-electron (omega-linear) counterterm
// subtracted, and are kept to leading order in alpha0 (the order at which the
// Bethe-log result holds in the non-relativistic approximation).

EnergyResult free_space_lamb_shift(const DipoleSpecies& species, const IntegralSpec& spec = {});
EnergyResult free_space_lamb_energy(double rho, const DipoleSpecies& species,
                                    const IntegralSpec& spec = {});

enum class Recurrence { NoRec, Full };

// O(rho) scattering shift: Wick quadrature of alpha phi^(1)(iu).
EnergyResult scattering_lamb_shift_rho1(const DipoleSpecies& species, const MediumSpec& medium,
                                        Recurrence rec = Recurrence::NoRec,
                                        const IntegralSpec& spec = {});

enum class VacuumRoute { Construction, LuWeights };

// O(rho^2) vacuum-energy density; Construction uses F = (rho/2) E exactly,
// LuWeights integrates the series terms with the 1/(m+2) weights by radial
// quadrature (independent route).
EnergyResult vacuum_energy_rho2(const DipoleSpecies& species, const MediumSpec& medium,
                                Recurrence rec = Recurrence::NoRec,
                                VacuumRoute route = VacuumRoute::Construction,
                                const IntegralSpec& spec = {});

// Susceptibility kernel on the imaginary axis for the momentum-space energy
// formulas: chi(q; iu) plus its q -> infinity limit (needed to renormalize the
// coincident-point divergences) and the oscillation half-period of its tail.
struct ChiCurve {
  std::function<Complex(double q, double u)> chi;
  std::function<Complex(double u)> chi_inf;
  double osc_half_period = 0.0;  // 0: plain decaying tail
};

// Average Lamb shift as a functional of the susceptibility (closed form in
// chi); works for any user-supplied kernel pair.
EnergyResult lamb_shift_from_chi(const ChiCurve& chi_perp, const ChiCurve& chi_par,
                                 const DipoleSpecies& species, double rho,
                                 const IntegralSpec& spec = {});

// Quasicrystalline vacuum energy: coupling-constant integration of the
// susceptibility form with the hard-sphere qc kernels.  The lambda integral
// is closed: each channel contributes [A/(A-r)] ln(1+A-r) - A with
// A = rho a0 k^2 G0 and r = chi^(2,0)/(rho a0).
EnergyResult vacuum_energy_qc(const DipoleSpecies& species, const MediumSpec& medium,
                              const IntegralSpec& spec = {});

// chi^(n,0) evaluator for the cluster series (n >= 3 user-supplied).
using ChiNKernel = std::function<Complex(double q, double u, Polarization pol)>;

// Cluster-expansion vacuum energy through the requested order in rho with the
// 1/2, 1/3 weights; ships n <= 2 kernels (hard sphere), higher orders must be
// supplied.
EnergyResult cluster_series_vacuum(const DipoleSpecies& species, const MediumSpec& medium,
                                   int order, const std::map<int, ChiNKernel>& kernels = {},
                                   const IntegralSpec& spec = {});
// matching shift series (unit weights), used by the rho/m-relation checks
EnergyResult cluster_series_shift(const DipoleSpecies& species, const MediumSpec& medium,
                                  int order, const std::map<int, ChiNKernel>& kernels = {},
                                  const IntegralSpec& spec = {});

// FL20-style closed comparator for the NoRec O(rho) shift (zeta0 < 1).
double scattering_shift_closed_comparator(const DipoleSpecies& species, const MediumSpec& medium);

}  // namespace vacua
