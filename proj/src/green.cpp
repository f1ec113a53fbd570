#include "vacua/green.hpp"

#include <cmath>

namespace vacua {

namespace {

using std::abs;

// series coefficients of the radiative P/Q brackets in x = kr:
//   bracket_P = sum_m i^m x^m [1/m! - 1/(m+1)! + 1/(m+2)!]
//   bracket_Q = sum_m i^m x^m [2/(m+1)! - 2/(m+2)!]
// with P_rad = (-1/4 pi r) bracket_P, Q_rad = (-1/4 pi r) bracket_Q.
Complex bracket_P_series(Complex x) {
  Complex sum = 0.0, pw = 1.0;
  double fact = 1.0;
  for (int m = 0; m <= 24; ++m) {
    const double c = 1.0 / fact - 1.0 / (fact * (m + 1)) + 1.0 / (fact * (m + 1) * (m + 2));
    sum += pw * c;
    pw *= Complex(0, 1) * x;
    fact *= (m + 1);
  }
  return sum;
}

Complex bracket_Q_series(Complex x) {
  Complex sum = 0.0, pw = 1.0;
  double fact = 1.0;
  for (int m = 0; m <= 24; ++m) {
    const double c = 2.0 / (fact * (m + 1)) - 2.0 / (fact * (m + 1) * (m + 2));
    sum += pw * c;
    pw *= Complex(0, 1) * x;
    fact *= (m + 1);
  }
  return sum;
}

}  // namespace

Complex ComplexDyad::transverse_part(const Vec3& n) const {
  const Eigen::Matrix3cd proj = Eigen::Matrix3cd::Identity() - (n * n.transpose()).cast<Complex>();
  return 0.5 * (m * proj).trace();
}

Complex ComplexDyad::longitudinal_part(const Vec3& n) const {
  return (n.cast<Complex>().transpose() * m * n.cast<Complex>())(0);
}

ComplexDyad green_static(const Vec3& r, Complex k) {
  const double rn = r.norm();
  if (!(rn > 0.0)) throw_error(ErrorKind::SingularPoint, "green_static at r = 0");
  const Vec3 n = r / rn;
  const Complex pref = 1.0 / (4.0 * M_PI * k * k * rn * rn * rn);
  ComplexDyad out;
  out.m = pref * (Eigen::Matrix3cd::Identity() - 3.0 * (n * n.transpose()).cast<Complex>());
  return out;
}

PQPair pq_static(Complex r, Complex k) {
  const Complex p = 1.0 / (4.0 * M_PI * k * k * r * r * r);
  return {p, -2.0 * p};
}

PQPair pq_radiative(Complex r, Complex k) {
  const Complex x = k * r;
  Complex bp, bq;
  if (abs(x) < 0.5) {
    bp = bracket_P_series(x);
    bq = bracket_Q_series(x);
  } else {
    const Complex e = std::exp(Complex(0, 1) * x);
    bp = e * (1.0 + Complex(0, 1) / x - 1.0 / (x * x)) + 1.0 / (x * x);
    bq = e * (-2.0 * Complex(0, 1) / x + 2.0 / (x * x)) - 2.0 / (x * x);
  }
  const Complex pref = -1.0 / (4.0 * M_PI * r);
  return {pref * bp, pref * bq};
}

ComplexDyad green_radiative(const Vec3& r, Complex k) {
  const double rn = r.norm();
  ComplexDyad out;
  if (rn == 0.0) {
    out.m = Complex(0, -1) * k / (6.0 * M_PI) * Eigen::Matrix3cd::Identity();
    return out;
  }
  const Vec3 n = r / rn;
  const PQPair pq = pq_radiative(Complex(rn, 0), k);
  const Eigen::Matrix3cd nn = (n * n.transpose()).cast<Complex>();
  out.m = pq.P * (Eigen::Matrix3cd::Identity() - nn) + pq.Q * nn;
  return out;
}

ComplexDyad green_total(const Vec3& r, Complex k) {
  const double rn = r.norm();
  if (!(rn > 0.0)) throw_error(ErrorKind::SingularPoint, "green_total at r = 0");
  ComplexDyad s = green_static(r, k);
  ComplexDyad rad = green_radiative(r, k);
  return s + rad;
}

MomentumGreen green_momentum(double q, Complex k) {
  if (q < 0.0) throw_error(ErrorKind::InvalidParameter, "q must be nonnegative");
  if (k.imag() == 0.0 && std::abs(q - std::abs(k.real())) < 1e-12 * (std::abs(k.real()) + 1.0))
    throw_error(ErrorKind::OnShellPole,
                "q on the light cone at real k; Wick-rotate or supply k + i eps");
  return {1.0 / (k * k - q * q), 1.0 / (k * k)};
}

PQPair pq_decompose(double r, Complex k) {
  if (!(r > 0.0)) throw_error(ErrorKind::SingularPoint, "pq_decompose at r = 0");
  return pq_decompose_c(Complex(r, 0), k);
}

PQPair pq_decompose_c(Complex r, Complex k) {
  if (k == Complex(0, 0)) throw_error(ErrorKind::SingularPoint, "pq_decompose at k = 0");
  const PQPair s = pq_static(r, k);
  const PQPair rad = pq_radiative(r, k);
  return {s.P + rad.P, s.Q + rad.Q};
}

Complex green_trace(Complex r, Complex k) {
  return -std::exp(Complex(0, 1) * k * r) / (2.0 * M_PI * r);
}

}  // namespace vacua
