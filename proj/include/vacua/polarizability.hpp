#pragma once

#include <complex>

#include "vacua/params.hpp"

namespace vacua {

using Complex = std::complex<double>;

// scalar radiative potential of free space, phi0 = -i omega^3 / (2 pi c^3)
Complex phi0(Complex k);

// bare polarizability alpha0(w) = 2 pi g / (1 - w^2)  (natural units, k0 = 1)
Complex alpha_bare(Complex omega, const DipoleSpecies& species);

// free-space renormalized: alpha = alpha0 (1 + alpha0 phi0)^-1
Complex alpha_free(Complex omega, const DipoleSpecies& species);

// stochastically renormalized: alpha~ = alpha0 (1 + alpha0 phi)^-1
Complex alpha_stoch(Complex omega, const DipoleSpecies& species, Complex phi);

}  // namespace vacua
