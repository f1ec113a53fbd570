#pragma once

#include <map>
#include <string>

#include "vacua/green.hpp"
#include "vacua/params.hpp"
#include "vacua/quadrature.hpp"

namespace vacua {

// Scalar radiative potential phi(omega) = phi0 + phi_sc and its cluster
// components.  All evaluators accept complex k; on the imaginary axis
// (k = iu) every value is real.

struct PhiBreakdown {
  Complex total = 0.0;
  Complex perp2 = 0.0;  // 2 phi_perp
  Complex par = 0.0;    // phi_par
  std::map<std::string, Complex> components;  // free, pair_norec, overdensity, recurrent_partial_m
};

enum class Phi1Branch { Closed, SmallZeta };
enum class RecurrentMode { Resummed, PartialSum };

// Two-body hard-sphere term, Closed:
//   phi1 = (-k^3/2pi) rho_alpha e^{2 i zeta} [1/z^3 - 2i/z^2 - 1/z + i/2],  zeta = k xi.
// SmallZeta branch: (-k^3/2pi) rho_alpha [1/z^3 + 1/z + 7i/6 - z], accurate to O(z^2).
Complex phi1_hs(Complex k, double xi, Complex rho_alpha, Phi1Branch branch = Phi1Branch::Closed);

// Transverse/longitudinal split of the same term.  Both components carry the
// -k^3/2pi normalization so that perp2 + par equals phi1_hs exactly.
struct PhiSplit {
  Complex perp2;
  Complex par;
};
PhiSplit phi1_hs_split(Complex k, double xi, Complex rho_alpha);

// Overdensity shell h_ovd = C xi delta(r - xi):
//   (-k^3/2pi) C rho_alpha e^{2 i zeta}[3/z^3 - 6i/z^2 - 5/z + 2i + z]
Complex phi1_overdensity(Complex k, double xi, double C, Complex rho_alpha);
PhiSplit phi1_overdensity_split(Complex k, double xi, double C, Complex rho_alpha);

// Full recurrent-scattering series by radial quadrature of
//   -k^4 rho alpha [ 2P^2/(1-(k^2 a P)^2) + Q^2/(1-(k^2 a Q)^2) ] over r > xi.
// PartialSum(M) truncates the geometric series at order M; PartialSum(0)
// equals phi1_hs(Closed).
Complex phi1_recurrent(Complex k, double xi, Complex alpha, double rho, RecurrentMode mode,
                       int partial_order = 0, const IntegralSpec& spec = {});
// single term of the series (order m), for hierarchy checks
Complex phi1_recurrent_term(Complex k, double xi, Complex alpha, double rho, int m,
                            const IntegralSpec& spec = {});

// Assembled scattering potential for the configured correlation model, with
// the split and the per-diagram components.
PhiBreakdown phi_scattering(Complex k, const MediumSpec& medium, Complex alpha);

enum class Polarization { Perp, Par };

// Pair-correlation susceptibility kernel
//   chi2_p(q;w) = [-k^2 a0^2 rho^2/(1+delta_perp)] *
//                 [ int d^3r e^{iqr} h(r) Tr{G0(r) P_p(q^)} ]
// with the contact part of the electrostatic propagator added analytically.
Complex chi2_q(double q, Complex k, Polarization pol, const MediumSpec& medium, Complex alpha0,
               const IntegralSpec& spec = {});

// large-q limits: perp -> 0, par -> (rho a0)^2 (used by the momentum-space
// renormalization subtractions)
Complex chi2_q_inf(Polarization pol, const MediumSpec& medium, Complex alpha0);

struct Chi2Kernel {
  MediumSpec medium;
  Complex alpha0;  // at the evaluation frequency
  IntegralSpec spec{};
  Complex operator()(double q, Complex k, Polarization pol) const {
    return chi2_q(q, k, pol, medium, alpha0, spec);
  }
};

// quasicrystalline geometric resummation chi_qc = rho a0 / (1 - chi2/(rho a0))
struct ChiQc {
  Complex perp;
  Complex par;
};
ChiQc chi_qc(double q, Complex k, const MediumSpec& medium, Complex alpha0,
             const IntegralSpec& spec = {});

// Resummed recurrent pair susceptibility kernel in real space.  With
// include_nonrecurrent the m = 0 term of the geometric series is kept;
// otherwise only m >= 1 (the genuinely recurrent part).
ComplexDyad chi2_recurrent(const Vec3& r, Complex k, Complex alpha, double rho,
                           const MediumSpec& medium, bool include_nonrecurrent = false);

// zero-mode estimate chi2_rec(q=0) ~ (1/3)(rho a~)^2 (a~/4 pi xi^3)^2
double chi2_recurrent_zero_mode(double alpha_t, double rho, double xi);

}  // namespace vacua
