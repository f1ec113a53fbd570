#pragma once

#include <complex>
#include <functional>

#include "vacua/errors.hpp"

namespace vacua {

using Complex = std::complex<double>;

enum class TailMap { Exp, Algebraic };

struct IntegralSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 200;
  TailMap tail_map = TailMap::Exp;
  double tail_scale = 1.0;  // length scale of the semi-infinite substitution

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
      throw_error(ErrorKind::InvalidParameter, "tolerances must be positive");
    if (max_subdivisions < 16)
      throw_error(ErrorKind::InvalidParameter, "max_subdivisions must be at least 16");
    if (!(tail_scale > 0.0))
      throw_error(ErrorKind::InvalidParameter, "tail_scale must be positive");
  }
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

// Adaptive Gauss-Kronrod 7/15 on a finite interval.  Deterministic: the
// subdivision order depends only on the integrand values.
QuadResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                            const IntegralSpec& spec);

// Semi-infinite integral via the tail substitution selected by spec.tail_map:
//   Exp:        x = a - L ln(1-t)
//   Algebraic:  x = a + L t/(1-t)
QuadResult integrate_semi_infinite(const std::function<double(double)>& f, double a,
                                   const IntegralSpec& spec);

// Ground-state frequency integral on the imaginary axis:
//   int_0^inf du f(iu),  f real there (checked on samples).
// Returns the integral; throws NonDecayingIntegrand / ToleranceNotMet.
double wick_integrate(const std::function<Complex(double)>& f_iu, const IntegralSpec& spec);

// int_{r_min}^inf kernel(r) dr for a decaying complex kernel.
Complex radial_integrate(const std::function<Complex(double)>& kernel, double r_min,
                         const IntegralSpec& spec);

// Same integral for an oscillatory kernel analytic in the upper half r-plane
// (factor e^{2ikr}, Re k > 0): evaluates i int_0^inf kernel(r_min + i s) ds.
Complex radial_integrate_rotated(const std::function<Complex(Complex)>& kernel, double r_min,
                                 const IntegralSpec& spec);

// (2 pi)^-3 angular-reduced momentum integral (1/2pi^2) int_0^inf q^2 f(q) dq.
Complex momentum_integrate(const std::function<Complex(double)>& f, const IntegralSpec& spec);

// Lattice ("mode-count") regularization of int d^3q/(2pi)^3: no integral is
// performed, the measure collapses to the number density.
double momentum_mode_count(double rho);

// Oscillatory tail with asymptotic period 2*half_period: integrates
// [a, a + n_panels*half_period] panel by panel and accelerates the partial
// sums by iterated averaging.  Suitable for bounded, asymptotically periodic
// integrands (hard-sphere structure factors).
double oscillatory_tail_integrate(const std::function<double(double)>& f, double a,
                                  double half_period, const IntegralSpec& spec,
                                  int n_panels = 64, int levels = 10);

// Fixed Gauss-Legendre rule (deterministic shared grids).
struct GaussRule {
  std::vector<double> x, w;  // nodes/weights on [-1, 1]
  explicit GaussRule(int n);
  // nodes/weights mapped to [a, b]
  void mapped(double a, double b, std::vector<double>& xs, std::vector<double>& ws) const;
};

}  // namespace vacua
