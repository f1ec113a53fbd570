#include "vacua/phi.hpp"

#include <cmath>

#include "vacua/polarizability.hpp"

namespace vacua {

namespace {

constexpr Complex kI{0.0, 1.0};

// D = P - Q = (-e^{ikr}/4 pi r)(1 + 3i/x - 3/x^2), the j2-weighted combination
Complex pq_difference(double r, Complex k) {
  const Complex x = k * r;
  return (-std::exp(kI * x) / (4.0 * M_PI * r)) * (1.0 + 3.0 * kI / x - 3.0 / (x * x));
}

// Angular projections of Tr{G0(r) P_p(q^)} against e^{iq.r}:
//   W_perp = (2/3)[j0 T - j2 D],  W_par = (1/3)[j0 T + 2 j2 D]
Complex angular_weight(double q, double r, Complex k, Polarization pol) {
  const double j0 = std::sph_bessel(0, q * r);
  const double j2 = std::sph_bessel(2, q * r);
  const Complex T = green_trace(Complex(r, 0), k);
  const Complex D = pq_difference(r, k);
  if (pol == Polarization::Perp) return (2.0 / 3.0) * (j0 * T - j2 * D);
  return (1.0 / 3.0) * (j0 * T + 2.0 * j2 * D);
}

Complex integrate_complex_finite(const std::function<Complex(double)>& f, double a, double b,
                                 const IntegralSpec& spec) {
  auto re = [&f](double x) { return f(x).real(); };
  auto im = [&f](double x) { return f(x).imag(); };
  return {integrate_finite(re, a, b, spec).value, integrate_finite(im, a, b, spec).value};
}

// exterior radial integral of a kernel carrying e^{2ikr} decay; picks the
// integration path from the frequency axis
Complex exterior_radial(const std::function<Complex(Complex)>& kernel, double xi, Complex k,
                        const IntegralSpec& spec) {
  if (k.imag() > 0.0) {
    IntegralSpec s = spec;
    s.tail_scale = std::min(1.0 / (2.0 * k.imag()), 1e3);
    auto f = [&kernel](double r) { return kernel(Complex(r, 0)); };
    return radial_integrate(f, xi, s);
  }
  IntegralSpec s = spec;
  if (k.real() != 0.0) s.tail_scale = std::min(1.0 / (2.0 * std::abs(k.real())), 1e3);
  return radial_integrate_rotated(kernel, xi, s);
}

}  // namespace

Complex phi1_hs(Complex k, double xi, Complex rho_alpha, Phi1Branch branch) {
  if (!(xi > 0.0)) throw_error(ErrorKind::InvalidParameter, "xi must be positive");
  const Complex z = k * xi;
  const Complex pref = -k * k * k / (2.0 * M_PI) * rho_alpha;
  if (branch == Phi1Branch::Closed) {
    return pref * std::exp(2.0 * kI * z) *
           (1.0 / (z * z * z) - 2.0 * kI / (z * z) - 1.0 / z + 0.5 * kI);
  }
  if (std::abs(z) >= 1.0)
    throw_error(ErrorKind::BranchOutOfRange, "SmallZeta branch requires |k xi| < 1");
  return pref * (1.0 / (z * z * z) + 1.0 / z + kI * 7.0 / 6.0 - z);
}

PhiSplit phi1_hs_split(Complex k, double xi, Complex rho_alpha) {
  if (!(xi > 0.0)) throw_error(ErrorKind::InvalidParameter, "xi must be positive");
  const Complex z = k * xi;
  const Complex ez = std::exp(kI * z);
  // both components normalized with k^3 so the split sums to phi1_hs exactly
  const Complex perp2 = (k * k * k * ez / (4.0 * M_PI * z * z * z)) * rho_alpha *
                        (2.0 - 2.0 * kI * z + ez * (-2.0 + 4.0 * kI * z + 2.0 * z * z - kI * z * z * z));
  const Complex par =
      (-k * k * k / (2.0 * M_PI)) * rho_alpha * ez * (1.0 / (z * z * z) - kI / (z * z));
  return {perp2, par};
}

Complex phi1_overdensity(Complex k, double xi, double C, Complex rho_alpha) {
  if (C < 0.0) throw_error(ErrorKind::InvalidParameter, "overdensity amplitude C must be >= 0");
  if (!(xi > 0.0)) throw_error(ErrorKind::InvalidParameter, "xi must be positive");
  if (C == 0.0) return 0.0;
  const Complex z = k * xi;
  return (-k * k * k / (2.0 * M_PI)) * C * rho_alpha * std::exp(2.0 * kI * z) *
         (3.0 / (z * z * z) - 6.0 * kI / (z * z) - 5.0 / z + 2.0 * kI + z);
}

PhiSplit phi1_overdensity_split(Complex k, double xi, double C, Complex rho_alpha) {
  if (C == 0.0) return {0.0, 0.0};
  const Complex rc(xi, 0);
  const PQPair t = pq_decompose_c(rc, k);
  const PQPair s = pq_static(rc, k);
  const PQPair rad = pq_radiative(rc, k);
  const Complex shell = -k * k * k * k * rho_alpha * C * xi * 4.0 * M_PI * xi * xi;
  return {shell * (2.0 * t.P * rad.P + t.Q * rad.Q), shell * (2.0 * t.P * s.P + t.Q * s.Q)};
}

Complex phi1_recurrent_term(Complex k, double xi, Complex alpha, double rho, int m,
                            const IntegralSpec& spec) {
  const Complex k2a = k * k * alpha;
  auto kern = [&](Complex r) -> Complex {
    const PQPair pq = pq_decompose_c(r, k);
    const Complex gp = std::pow(k2a * pq.P, 2 * m);
    const Complex gq = std::pow(k2a * pq.Q, 2 * m);
    return -k * k * k * k * rho * alpha * 4.0 * M_PI * r * r *
           (2.0 * pq.P * pq.P * gp + pq.Q * pq.Q * gq);
  };
  return exterior_radial(kern, xi, k, spec);
}

Complex phi1_recurrent(Complex k, double xi, Complex alpha, double rho, RecurrentMode mode,
                       int partial_order, const IntegralSpec& spec) {
  if (!(xi > 0.0)) throw_error(ErrorKind::InvalidParameter, "xi must be positive");
  if (alpha == Complex(0, 0)) return 0.0;
  if (mode == RecurrentMode::Resummed) {
    // the resummation requires |k^2 a P|, |k^2 a Q| < 1 on the path; the
    // kernels decay with r so the boundary value at r = xi is the maximum
    const PQPair edge = pq_decompose_c(Complex(xi, 0), k);
    const Complex k2a = k * k * alpha;
    if (std::abs(k2a * edge.P) >= 1.0 || std::abs(k2a * edge.Q) >= 1.0)
      throw_error(ErrorKind::ResummationPole,
                  "recurrent denominator vanishes on the path (zeta^3 <~ g)");
    auto kern = [&](Complex r) -> Complex {
      const PQPair pq = pq_decompose_c(r, k);
      const Complex ap = k2a * pq.P, aq = k2a * pq.Q;
      return -k * k * k * k * rho * alpha * 4.0 * M_PI * r * r *
             (2.0 * pq.P * pq.P / (1.0 - ap * ap) + pq.Q * pq.Q / (1.0 - aq * aq));
    };
    return exterior_radial(kern, xi, k, spec);
  }
  Complex sum = 0.0;
  for (int m = 0; m <= partial_order; ++m) sum += phi1_recurrent_term(k, xi, alpha, rho, m, spec);
  return sum;
}

PhiBreakdown phi_scattering(Complex k, const MediumSpec& medium, Complex alpha) {
  medium.validate();
  PhiBreakdown out;
  const Complex rho_alpha = medium.rho() * alpha;
  const PhiSplit hs = phi1_hs_split(k, medium.xi(), rho_alpha);
  out.components["pair_norec"] = hs.perp2 + hs.par;
  out.perp2 = hs.perp2;
  out.par = hs.par;
  if (medium.correlation == CorrelationModel::HardSphereOverdensity) {
    const PhiSplit ovd = phi1_overdensity_split(k, medium.xi(), medium.overdensity_c, rho_alpha);
    out.components["overdensity"] = ovd.perp2 + ovd.par;
    out.perp2 += ovd.perp2;
    out.par += ovd.par;
  }
  out.total = out.perp2 + out.par;
  return out;
}

Complex chi2_q(double q, Complex k, Polarization pol, const MediumSpec& medium, Complex alpha0,
               const IntegralSpec& spec) {
  if (q < 0.0) throw_error(ErrorKind::InvalidParameter, "q must be nonnegative");
  medium.validate();
  const double xi = medium.xi();
  const double rho = medium.rho();
  const double delta = (pol == Polarization::Perp) ? 1.0 : 0.0;
  const double contact_trace = (pol == Polarization::Perp) ? 2.0 / 3.0 : 1.0 / 3.0;

  auto wfun = [&](double r) { return 4.0 * M_PI * r * r * angular_weight(q, r, k, pol); };
  // hard-sphere exclusion: h = -1 inside r < xi
  Complex hole = -integrate_complex_finite(wfun, 1e-12 * xi, xi, spec);
  if (medium.correlation == CorrelationModel::HardSphereOverdensity)
    hole += medium.overdensity_c * xi * wfun(xi);
  const Complex contact = -contact_trace / (k * k);  // h(0) Tr{L P_p}/k^2
  return (-k * k * alpha0 * alpha0 * rho * rho / (1.0 + delta)) * (hole + contact);
}

Complex chi2_q_inf(Polarization pol, const MediumSpec& medium, Complex alpha0) {
  if (pol == Polarization::Perp) return 0.0;
  const Complex ra = medium.rho() * alpha0;
  return ra * ra;
}

ChiQc chi_qc(double q, Complex k, const MediumSpec& medium, Complex alpha0,
             const IntegralSpec& spec) {
  const Complex ra = medium.rho() * alpha0;
  ChiQc out;
  for (Polarization pol : {Polarization::Perp, Polarization::Par}) {
    const Complex ratio = chi2_q(q, k, pol, medium, alpha0, spec) / ra;
    const Complex den = 1.0 - ratio;
    if (std::abs(den) < 1e-12)
      throw_error(ErrorKind::GeometricPole, "quasicrystalline series ratio reaches 1");
    (pol == Polarization::Perp ? out.perp : out.par) = ra / den;
  }
  return out;
}

ComplexDyad chi2_recurrent(const Vec3& r, Complex k, Complex alpha, double rho,
                           const MediumSpec& medium, bool include_nonrecurrent) {
  const double rn = r.norm();
  if (!(rn > 0.0)) throw_error(ErrorKind::SingularPoint, "chi2_recurrent at r = 0");
  const double h = (rn < medium.xi()) ? -1.0 : 0.0;
  ComplexDyad out;
  if (1.0 + h == 0.0) return out;
  const PQPair pq = pq_decompose(rn, k);
  const Complex k2a = k * k * alpha;
  const Complex ap = k2a * pq.P, aq = k2a * pq.Q;
  if (std::abs(ap) >= 1.0 || std::abs(aq) >= 1.0)
    throw_error(ErrorKind::ResummationPole, "recurrent denominator vanishes");
  Complex fp = pq.P / (1.0 - ap * ap);
  Complex fq = pq.Q / (1.0 - aq * aq);
  if (!include_nonrecurrent) {
    fp -= pq.P;  // drop the m = 0 term of the geometric series
    fq -= pq.Q;
  }
  const Vec3 n = r / rn;
  const Eigen::Matrix3cd nn = (n * n.transpose()).cast<Complex>();
  const Complex pref = -k * k * rho * alpha * rho * alpha * (1.0 + h);
  out.m = pref * (fp * (Eigen::Matrix3cd::Identity() - nn) + fq * nn);
  return out;
}

double chi2_recurrent_zero_mode(double alpha_t, double rho, double xi) {
  const double ra = rho * alpha_t;
  const double c = alpha_t / (4.0 * M_PI * xi * xi * xi);
  return (1.0 / 3.0) * ra * ra * c * c;
}

}  // namespace vacua
