#pragma once

#include <Eigen/Dense>
#include <complex>

#include "vacua/errors.hpp"

namespace vacua {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;

// 3x3 complex tensor with the accessors the scattering formulas need.
struct ComplexDyad {
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();

  Complex trace() const { return m.trace(); }
  // component transverse to the unit vector n: Tr{D (I - n n)} / 2
  Complex transverse_part(const Vec3& n) const;
  // component longitudinal to n: Tr{D n n}
  Complex longitudinal_part(const Vec3& n) const;

  ComplexDyad operator+(const ComplexDyad& o) const { return {m + o.m}; }
  ComplexDyad operator*(Complex s) const { return {(m * s).eval()}; }
};

// Transverse/longitudinal scalars of a dyad with respect to r-hat:
//   D = P (I - r r) + Q r r.
struct PQPair {
  Complex P;
  Complex Q;
};

// Source tensor of a spherical exclusion volume; the delta-function contact
// part of the electrostatic propagator is never sampled numerically, the
// formulas that need it use this constant.
inline constexpr double kContactThird = 1.0 / 3.0;

// Electrostatic dyadic, principal value part only:
//   PV[(1/k^2) grad grad](-1/4 pi r) = (I - 3 r r) / (4 pi k^2 r^3).
ComplexDyad green_static(const Vec3& r, Complex k);

// Radiative dyadic, entire in r; at r = 0 returns the renormalized coincident
// value -i k/(6 pi) I (the odd-in-k part; the even real part is absorbed in
// the mass/frequency renormalization).
ComplexDyad green_radiative(const Vec3& r, Complex k);

ComplexDyad green_total(const Vec3& r, Complex k);

// Momentum-space components: G_perp = 1/(k^2 - q^2), G_par = 1/k^2.
struct MomentumGreen {
  Complex perp;
  Complex par;
};
MomentumGreen green_momentum(double q, Complex k);

// P/Q scalars of the full dyad:
//   P = (-e^{ikr}/4 pi r)[1 + i/(kr) - 1/(kr)^2]
//   Q = (-e^{ikr}/4 pi r)[-2i/(kr) + 2/(kr)^2]
PQPair pq_decompose(double r, Complex k);
PQPair pq_decompose_c(Complex r, Complex k);  // analytic continuation in r (contour rotation)

// Static-part scalars (P_s, Q_s) = (1, -2)/(4 pi k^2 r^3) and their radiative
// complements, evaluated stably near kr -> 0.
PQPair pq_static(Complex r, Complex k);
PQPair pq_radiative(Complex r, Complex k);

// trace of the full dyad: 2P + Q = -e^{ikr}/(2 pi r)
Complex green_trace(Complex r, Complex k);

}  // namespace vacua
