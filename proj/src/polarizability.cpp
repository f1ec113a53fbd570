#include "vacua/polarizability.hpp"

#include <cmath>

namespace vacua {

Complex phi0(Complex k) { return Complex(0, -1) * k * k * k / (2.0 * M_PI); }

Complex alpha_bare(Complex omega, const DipoleSpecies& species) {
  species.validate();
  const Complex den = 1.0 - omega * omega;
  if (omega.imag() == 0.0 && std::abs(den) < 1e-12)
    throw_error(ErrorKind::ResonancePole, "alpha_bare on the real-axis resonance");
  return 2.0 * M_PI * species.gamma_ratio / den;
}

Complex alpha_free(Complex omega, const DipoleSpecies& species) {
  const Complex a0 = alpha_bare(omega, species);
  return a0 / (1.0 + a0 * phi0(omega));
}

Complex alpha_stoch(Complex omega, const DipoleSpecies& species, Complex phi) {
  const Complex a0 = alpha_bare(omega, species);
  const Complex den = 1.0 + a0 * phi;
  if (std::abs(den) < 1e-10)
    throw_error(ErrorKind::DivergentRenormalization,
                "1 + alpha0 phi vanishes (polariton-like pole)");
  return a0 / den;
}

}  // namespace vacua
