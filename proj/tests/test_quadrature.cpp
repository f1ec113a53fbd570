#include <cmath>

#include "doctest.h"
#include "vacua/quadrature.hpp"

using namespace vacua;

TEST_CASE("wick integral of a lorentzian") {
  IntegralSpec spec;
  auto f = [](double u) { return Complex(1.0 / (1.0 + u * u), 0.0); };
  CHECK(wick_integrate(f, spec) == doctest::Approx(M_PI / 2).epsilon(1e-9));
}

TEST_CASE("wick integral of the hard-sphere radiative tail shape") {
  IntegralSpec spec;
  spec.tail_map = TailMap::Algebraic;
  const double zeta = 0.7;
  auto f = [zeta](double u) { return Complex(u * u * u * std::exp(-2.0 * zeta * u), 0.0); };
  const double expected = 6.0 / std::pow(2.0 * zeta, 4);
  CHECK(wick_integrate(f, spec) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("wick rejects a complex integrand") {
  IntegralSpec spec;
  auto f = [](double u) { return Complex(1.0 / (1.0 + u * u), 1e-6); };
  CHECK_THROWS_AS(wick_integrate(f, spec), Error);
}

TEST_CASE("radial integral against the exponential-integral reference") {
  // int_xi^inf e^{-2ur}/r^4 4 pi r^2 dr at u=1, xi=1  ->  4 pi int_1^inf e^{-2r}/r^2 dr
  IntegralSpec spec;
  auto kern = [](Complex r) { return 4.0 * M_PI * std::exp(-2.0 * r) / (r * r); };
  const Complex got = radial_integrate([&](double r) { return kern(Complex(r, 0)); }, 1.0, spec);
  // reference: 4 pi [e^{-2}/1 - 2 E1(2)] with E1(2) = 0.048900510708061120
  const double e1_2 = 0.048900510708061120;
  const double expected = 4.0 * M_PI * (std::exp(-2.0) - 2.0 * e1_2);
  CHECK(got.real() == doctest::Approx(expected).epsilon(1e-9));
  CHECK(got.imag() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("zero kernel integrates to zero") {
  IntegralSpec spec;
  const Complex got = radial_integrate([](double) { return Complex(0, 0); }, 0.5, spec);
  CHECK(got == Complex(0, 0));
}

TEST_CASE("divergent kernel at the origin is rejected") {
  IntegralSpec spec;
  auto f = [](double r) { return Complex(1.0 / (r * r * r * r), 0); };
  CHECK_THROWS_AS(radial_integrate(f, 0.0, spec), Error);
}

TEST_CASE("momentum integral of a gaussian") {
  IntegralSpec spec;
  auto f = [](double q) { return Complex(std::exp(-q * q), 0); };
  const double expected = std::sqrt(M_PI) / 4.0 / (2.0 * M_PI * M_PI);
  CHECK(momentum_integrate(f, spec).real() == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("mode-count regulator returns the density") {
  CHECK(momentum_mode_count(0.37) == 0.37);
}

TEST_CASE("tolerance refinement is self-consistent") {
  IntegralSpec loose;
  loose.rel_tol = 1e-6;
  loose.abs_tol = 1e-9;
  IntegralSpec tight;
  tight.rel_tol = 1e-8;
  tight.abs_tol = 1e-11;
  auto f = [](double x) { return std::exp(-x) * std::cos(7.0 * x); };
  const QuadResult a = integrate_semi_infinite(f, 0.0, loose);
  const QuadResult b = integrate_semi_infinite(f, 0.0, tight);
  CHECK(std::abs(a.value - b.value) <= std::max(a.error, 1e-12));
}

TEST_CASE("oscillatory tail accelerates a fresnel-type integral") {
  // int_1^inf cos(3 q)/q dq = -Ci(3), evaluated through the panel scheme
  IntegralSpec spec;
  auto f = [](double q) { return std::cos(3.0 * q) / q; };
  const double tail = oscillatory_tail_integrate(f, 1.0, M_PI / 3.0, spec);
  const double ci3 = 0.11962978600800033;  // Ci(3)
  CHECK(tail == doctest::Approx(-ci3).epsilon(1e-8));
}

TEST_CASE("invalid spec is rejected") {
  IntegralSpec spec;
  spec.max_subdivisions = 4;
  auto f = [](double u) { return Complex(1.0 / (1.0 + u * u), 0); };
  CHECK_THROWS_AS(wick_integrate(f, spec), Error);
}
