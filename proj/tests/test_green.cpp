#include <cmath>

#include "doctest.h"
#include "vacua/green.hpp"
#include "vacua/quadrature.hpp"

using namespace vacua;

namespace {

// central finite differences of the scalar potential -1/(4 pi r)
double coulomb(double x, double y, double z) {
  return -1.0 / (4.0 * M_PI * std::sqrt(x * x + y * y + z * z));
}

double fd_zz(double d) {
  const double h = 1e-4;
  return (coulomb(0, 0, d + h) - 2.0 * coulomb(0, 0, d) + coulomb(0, 0, d - h)) / (h * h);
}

}  // namespace

TEST_CASE("static dyadic against finite differences of the potential") {
  const double d = 0.7;
  const ComplexDyad g = green_static(Vec3(0, 0, d), Complex(1, 0));
  CHECK(g.m(2, 2).real() == doctest::Approx(fd_zz(d)).epsilon(1e-6));
  CHECK(g.m(2, 2).real() == doctest::Approx(-1.0 / (2.0 * M_PI * d * d * d)).epsilon(1e-10));
  CHECK(std::abs(g.trace()) < 1e-15);  // laplacian of 1/r vanishes off the origin
  // explicit k^-2 scaling
  const ComplexDyad g2 = green_static(Vec3(0, 0, d), Complex(2, 0));
  CHECK(g2.m(2, 2).real() == doctest::Approx(g.m(2, 2).real() / 4.0).epsilon(1e-13));
  CHECK_THROWS_AS(green_static(Vec3(0, 0, 0), Complex(1, 0)), Error);
}

TEST_CASE("radiative dyadic limits") {
  // Im Tr at the origin = -k/2pi for real k
  const ComplexDyad g0 = green_radiative(Vec3(0, 0, 0), Complex(1, 0));
  CHECK(g0.trace().imag() == doctest::Approx(-1.0 / (2.0 * M_PI)).epsilon(1e-12));
  // far field: leading term -e^{ikr}/(4 pi r) on the transverse projector
  const double r = 4000.0;
  const ComplexDyad gf = green_radiative(Vec3(r, 0, 0), Complex(1, 0));
  const Complex lead = -std::exp(Complex(0, 1) * r) / (4.0 * M_PI * r);
  CHECK(gf.m(1, 1).real() == doctest::Approx(lead.real()).epsilon(1e-3));
  CHECK(gf.m(1, 1).imag() == doctest::Approx(lead.imag()).epsilon(1e-3));
  // purely imaginary k gives a real dyad
  const ComplexDyad gi = green_radiative(Vec3(0, 0.9, 0), Complex(0, 1.4));
  CHECK(gi.m.imag().cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("phi0 identity anchors the sign convention") {
  // k^2 i Im Tr G_rad(0,k) = -i k^3/(2 pi), checked through the r -> 0 limit
  for (double k : {0.5, 1.0, 2.0}) {
    auto imtr = [k](double r) { return green_radiative(Vec3(0, 0, r), Complex(k, 0)).trace().imag(); };
    const double f1 = imtr(1e-3), f2 = imtr(5e-4);
    const double limit = (4.0 * f2 - f1) / 3.0;  // h^2 Richardson
    CHECK(k * k * limit == doctest::Approx(-k * k * k / (2.0 * M_PI)).epsilon(1e-9));
  }
}

TEST_CASE("momentum components") {
  const MomentumGreen g = green_momentum(2.0, Complex(1, 0));
  CHECK(g.perp.real() == doctest::Approx(-1.0 / 3.0));
  CHECK(g.par.real() == doctest::Approx(1.0));
  const MomentumGreen g0 = green_momentum(0.0, Complex(0, 2));
  CHECK(g0.perp == g0.par);
  CHECK_THROWS_AS(green_momentum(1.0, Complex(1, 0)), Error);
}

TEST_CASE("pq scalars") {
  // kr = 1: bracket of P is 1 + i - 1 = i
  const double r = 0.25;
  const Complex k(4.0, 0.0);
  const PQPair pq = pq_decompose(r, k);
  const Complex expected = -Complex(0, 1) * std::exp(Complex(0, 1)) / (4.0 * M_PI * r);
  CHECK(pq.P.real() == doctest::Approx(expected.real()).epsilon(1e-13));
  CHECK(pq.P.imag() == doctest::Approx(expected.imag()).epsilon(1e-13));
  // near field of Q matches the longitudinal static part
  const PQPair nf = pq_decompose(1e-4, Complex(1, 0));
  CHECK(nf.Q.real() ==
        doctest::Approx(-1.0 / (2.0 * M_PI * 1e-12)).epsilon(2e-4));
  // 2P + Q equals the dyad trace
  const PQPair t = pq_decompose(0.7, Complex(1.3, 0));
  const Complex tr = green_total(Vec3(0, 0.7, 0), Complex(1.3, 0)).trace();
  CHECK(std::abs(2.0 * t.P + t.Q - tr) < 1e-12 * std::abs(tr));
  CHECK_THROWS_AS(pq_decompose(0.0, Complex(1, 0)), Error);
}

TEST_CASE("reconstructed dyad matches green_total entrywise") {
  const Vec3 r(0.3, -0.5, 0.8);
  const Complex k(0.9, 0.0);
  const PQPair pq = pq_decompose(r.norm(), k);
  const Vec3 n = r.normalized();
  Eigen::Matrix3cd rec = pq.P * (Eigen::Matrix3cd::Identity() - (n * n.transpose()).cast<Complex>()) +
                         pq.Q * (n * n.transpose()).cast<Complex>();
  const ComplexDyad tot = green_total(r, k);
  CHECK((rec - tot.m).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("reciprocity") {
  const Vec3 r(0.4, 1.1, -0.2);
  const Complex k(0.0, 0.8);
  const ComplexDyad a = green_total(r, k);
  const ComplexDyad b = green_total(-r, k);
  CHECK((a.m - b.m.transpose()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("fourier transform is transverse/longitudinal") {
  // radial j-projections of the dyads on the imaginary axis; the static part
  // needs its analytic contact term to become purely longitudinal
  const Complex k(0, 1.1);
  const double q = 1.7;
  IntegralSpec spec;
  spec.rel_tol = 1e-8;

  auto proj = [&](bool radiative, bool perp) {
    // FT projections: perp uses (2/3)(j0 T - j2 D), par uses (1/3)(j0 T + 2 j2 D)
    // with T, D built from the requested dyad part
    auto f = [&](double r) -> Complex {
      const PQPair pq = radiative ? pq_radiative(Complex(r, 0), k) : pq_static(Complex(r, 0), k);
      const double j0 = std::sph_bessel(0, q * r);
      const double j2 = std::sph_bessel(2, q * r);
      const Complex T = 2.0 * pq.P + pq.Q;
      const Complex D = pq.P - pq.Q;
      const Complex w = perp ? (j0 * T - j2 * D) : (j0 * T + 2.0 * j2 * D);
      return 4.0 * M_PI * r * r * w / 3.0;
    };
    // static kernel has an oscillatory 1/r tail in the j-transform
    auto fr = [&](double r) { return f(r).real(); };
    const double head = integrate_finite(fr, 1e-9, 8.0, spec).value;
    const double tail = oscillatory_tail_integrate(fr, 8.0, M_PI / q, spec, 64, 10);
    return head + tail;
  };

  // radiative: longitudinal projection vanishes, transverse matches 1/(k^2-q^2)
  const double rad_par = proj(true, false);
  const double rad_perp = proj(true, true);
  const MomentumGreen mg = green_momentum(q, k);
  CHECK(std::abs(rad_par) < 1e-8);
  CHECK(rad_perp == doctest::Approx(mg.perp.real()).epsilon(1e-7));
  // static + contact: transverse projection cancels, longitudinal = 1/k^2
  const double contact = (1.0 / (3.0 * (k * k).real()));
  const double stat_perp = proj(false, true) + contact;
  const double stat_par = proj(false, false) + contact;
  CHECK(std::abs(stat_perp) < 1e-7);
  CHECK(stat_par == doctest::Approx(mg.par.real()).epsilon(1e-7));
}
