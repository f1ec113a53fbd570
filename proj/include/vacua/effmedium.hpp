#pragma once

#include <functional>

#include "vacua/energy.hpp"
#include "vacua/params.hpp"
#include "vacua/quadrature.hpp"

namespace vacua {

// Continuum comparators: Maxwell-Garnett susceptibility, Lorentz-Lorenz
// shift, electrostatic binding energy, Schwinger bulk energies, ADGLP, and
// the SSZ/MSS/Onsager Lamb-shift prescriptions.

// real-valued curve on the imaginary frequency axis, u in units of omega0
using ImagAxisCurve = std::function<double(double)>;

struct EffectiveMedium {
  std::function<Complex(Complex)> chi;
  Complex epsilon(Complex w) const { return 1.0 + chi(w); }
  Complex n(Complex w) const { return std::sqrt(epsilon(w)); }  // principal branch
  Complex lorentz_factor(Complex w) const { return (chi(w) + 3.0) / 3.0; }
};

// chi_MG(w) = rho alpha0 / (1 - rho alpha0 / 3); pole at w^2 = 1 - 2x/9
Complex chi_mg(Complex omega, double rho, const DipoleSpecies& species);
EffectiveMedium maxwell_garnett(double rho, const DipoleSpecies& species);

// Lorentz-Lorenz shift from the pole of chi_MG (units omega0)
double ll_shift(double rho, const DipoleSpecies& species);

enum class BindingMethod { ClosedForm, ModeSum };

// energy of the electrostatic long-wavelength modes,
//   F_stat = -(rho hbar w0/2)[sqrt(1+4x/9) - 1]
EnergyResult electrostatic_binding_energy(double rho, const DipoleSpecies& species,
                                          BindingMethod method = BindingMethod::ClosedForm);

// Bullough-Obada interpretation: mode sum of ln[chi^3/((rho a0)^3 eps)],
// which keeps the two transverse local-field-factor logarithms.
EnergyResult bullough_obada_energy(double rho, const DipoleSpecies& species);

// same mode sum for a generic Lorentzian chi = f w0^2/(w0^2 - w^2); reproduces
// rho f^2 hbar w0/24 at leading order in the field strength factor f
EnergyResult bullough_obada_lorentzian(double field_strength);

enum class SchwingerMethod { Plain, OrderRho2 };

// F_Sch = (hbar/6 pi^2) int du u^3 [1 - n^3(iu)] with a sharp cutoff (the
// integral carries the free-space Lamb UV divergence)
EnergyResult schwinger_energy(const ImagAxisCurve& n_curve, double cutoff,
                              const IntegralSpec& spec = {});
// E_Sch = -(hbar/4 pi^2 rho) int du u^3 n(iu) chi(iu)
EnergyResult schwinger_shift(const ImagAxisCurve& n_curve, const ImagAxisCurve& chi_curve,
                             double rho, double cutoff, const IntegralSpec& spec = {});

// O(rho^2) coefficient of F_Sch against hbar Re int dw k^3 (rho alpha)^2,
// extracted numerically for the MG medium (expected -7/48 pi^2)
double schwinger_order_rho2_coefficient(const DipoleSpecies& species, const MediumSpec& medium,
                                        const IntegralSpec& spec = {});
// O(rho^3) coefficient of the extended (spatial-dispersion) Schwinger energy
// (expected -17/288 pi^2)
double schwinger_extended_order_rho3_coefficient(const DipoleSpecies& species,
                                                 const MediumSpec& medium,
                                                 const IntegralSpec& spec = {});

// extended Schwinger transverse bulk energy for a susceptibility kernel with
// spatial dispersion; order in {2,3} selects the coefficient checks
EnergyResult schwinger_extended(const std::function<double(double q, double u)>& chi_perp,
                                const DipoleSpecies& species, int order,
                                const IntegralSpec& spec = {});

// microscopic radiative vacuum energy of the MG medium: coefficients of
// hbar Re int dw k^3 (rho alpha)^order; order 2 from the transverse/
// longitudinal split of the pair potential, order 3 = 2x extended Schwinger
EnergyResult radiative_vacuum_energy_mg(double rho, const DipoleSpecies& species, int order,
                                        const IntegralSpec& spec = {});

// ADGLP long-wavelength prescription; UV-divergent in q, the explicit cutoff
// is mandatory
EnergyResult adglp_energy(const ImagAxisCurve& epsilon_curve, double q_max, double cutoff,
                          const IntegralSpec& spec = {});

// Schaden-Spruch-Zhou / Milonni-Schaden-Spruch / Onsager-cavity shifts
EnergyResult ssz_shift(const ImagAxisCurve& n_curve, const ImagAxisCurve& delta_chi_curve,
                       double rho, double cutoff, const IntegralSpec& spec = {});
EnergyResult mss_shift(const ImagAxisCurve& n_curve, const ImagAxisCurve& alpha_I,
                       const ImagAxisCurve& alpha_II, double rho, double cutoff,
                       const IntegralSpec& spec = {});
EnergyResult mss_shift_background(const ImagAxisCurve& n_curve, const ImagAxisCurve& alpha_I,
                                  const ImagAxisCurve& alpha_II, double cutoff,
                                  const IntegralSpec& spec = {});
EnergyResult onsager_shift(const ImagAxisCurve& n_curve, const ImagAxisCurve& alpha_I,
                           const ImagAxisCurve& alpha_II, double xi, double cutoff,
                           const IntegralSpec& spec = {});

}  // namespace vacua
