#include <cmath>

#include "doctest.h"
#include "vacua/phi.hpp"
#include "vacua/polarizability.hpp"
#include "vacua/quadrature.hpp"

using namespace vacua;

namespace {
DipoleSpecies species(double g) {
  DipoleSpecies sp;
  sp.gamma_ratio = g;
  return sp;
}
}  // namespace

TEST_CASE("bare polarizability values") {
  const DipoleSpecies sp = species(1e-6);
  CHECK(alpha_bare(Complex(0, 0), sp).real() == doctest::Approx(2.0 * M_PI * 1e-6).epsilon(1e-14));
  CHECK(alpha_bare(Complex(0, 1), sp).real() == doctest::Approx(M_PI * 1e-6).epsilon(1e-14));
  CHECK_THROWS_AS(alpha_bare(Complex(1, 0), sp), Error);
  // alpha0(iu) real positive
  for (double u : {0.1, 1.0, 14.0}) {
    const Complex a = alpha_bare(Complex(0, u), sp);
    CHECK(a.imag() == 0.0);
    CHECK(a.real() > 0.0);
  }
}

TEST_CASE("free-space renormalization and the optical theorem") {
  const DipoleSpecies sp = species(1e-6);
  CHECK(alpha_free(Complex(0, 0), sp) == alpha_bare(Complex(0, 0), sp));  // phi0(0) = 0
  for (double w : {0.3, 0.99, 1.5, 4.0}) {
    const Complex a = alpha_free(Complex(w, 0), sp);
    const double k3 = w * w * w;
    CHECK(std::abs((1.0 / a).imag() - k3 / (2.0 * M_PI)) < 1e-12 * k3 / (2.0 * M_PI));
  }
  // on the imaginary axis alpha is real with 0 < alpha < alpha0
  for (double u : {0.2, 1.0, 3.0}) {
    const Complex a = alpha_free(Complex(0, u), sp);
    const Complex a0 = alpha_bare(Complex(0, u), sp);
    CHECK(a.imag() == doctest::Approx(0.0));
    CHECK(a.real() > 0.0);
    CHECK(a.real() < a0.real());
  }
}

TEST_CASE("stochastic renormalization limits") {
  const DipoleSpecies sp = species(1e-6);
  const Complex w(0, 1);
  CHECK(alpha_stoch(w, sp, phi0(w)) == alpha_free(w, sp));
  CHECK(alpha_stoch(w, sp, Complex(0, 0)) == alpha_bare(w, sp));
  // compose with the pair potential at zeta0 = 0.1
  MediumSpec med;
  med.zeta0 = 0.1;
  med.rho_bar = 1e-3;
  const Complex a = alpha_free(w, sp);
  const Complex phi = phi0(w) + phi1_hs(w, med.xi(), med.rho() * a);
  const Complex at = alpha_stoch(w, sp, phi);
  CHECK(at.imag() == doctest::Approx(0.0));
  CHECK(std::isfinite(at.real()));
  // weak coupling: alpha~ -> alpha0 to first order
  const Complex a0 = alpha_bare(w, sp);
  CHECK(std::abs(at - a0) / std::abs(a0) < 2.0 * std::abs(a0 * phi));
  // divergent renormalization flagged
  CHECK_THROWS_AS(alpha_stoch(w, sp, -1.0 / a0), Error);
}

TEST_CASE("kramers-kronig spot check") {
  // alpha(iu) equals the dispersion integral of Im alpha over real omega
  const double g = 1e-3;  // wider line keeps the resonance resolvable
  const DipoleSpecies sp = species(g);
  const double u = 0.7;
  const Complex direct = alpha_free(Complex(0, u), sp);
  // alpha(iu) = (2/pi) int_0^inf w Im alpha(w) / (w^2 + u^2) dw, resonance at
  // w ~ 1 with half-width ~ g/2 resolved by splitting the interval
  IntegralSpec spec;
  spec.rel_tol = 1e-10;
  spec.abs_tol = 1e-16;
  spec.max_subdivisions = 2000;
  auto f = [&](double w) {
    const Complex a = alpha_free(Complex(w, 0), sp);
    return w * a.imag() / (w * w + u * u);
  };
  double total = integrate_finite(f, 1e-6, 1.0 - 50.0 * g, spec).value;
  total += integrate_finite(f, 1.0 - 50.0 * g, 1.0 + 50.0 * g, spec).value;
  total += integrate_finite(f, 1.0 + 50.0 * g, 200.0, spec).value;
  IntegralSpec tailspec;
  tailspec.tail_map = TailMap::Algebraic;
  total += integrate_semi_infinite(f, 200.0, tailspec).value;
  const double kk = 2.0 / M_PI * total;
  CHECK(kk == doctest::Approx(direct.real()).epsilon(1e-3));
}
