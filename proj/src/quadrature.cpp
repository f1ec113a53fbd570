#include "vacua/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace vacua {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (positive half; symmetric).
constexpr double kKronrodX[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
constexpr double kKronrodW[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
// Gauss-7 weights aligned with the even Kronrod nodes (0, 2, 4, 6).
constexpr double kGaussW[4] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870};

struct Panel {
  double a, b;
  double value, error;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  fv[7] = f(c);
  for (int i = 1; i < 8; ++i) {
    fv[7 - i] = f(c - h * kKronrodX[i]);
    fv[7 + i] = f(c + h * kKronrodX[i]);
  }
  double k15 = kKronrodW[0] * fv[7];
  double g7 = kGaussW[0] * fv[7];
  for (int i = 1; i < 8; ++i) {
    const double s = fv[7 - i] + fv[7 + i];
    k15 += kKronrodW[i] * s;
    if (i % 2 == 0) g7 += kGaussW[i / 2] * s;
  }
  k15 *= h;
  g7 *= h;
  const double diff = std::abs(k15 - g7);
  // standard QUADPACK-style error sharpening
  double err = diff;
  if (diff > 0.0) err = diff * std::min(1.0, std::pow(200.0 * diff / std::max(std::abs(k15), 1e-300), 1.5));
  return {a, b, k15, std::max(err, std::abs(k15) * 1e-15)};
}

}  // namespace

QuadResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                            const IntegralSpec& spec) {
  spec.validate();
  if (a == b) return {0.0, 0.0};
  std::vector<Panel> panels;
  panels.push_back(evaluate_panel(f, a, b));
  double total = panels[0].value, toterr = panels[0].error;
  int splits = 0;
  while (toterr > std::max(spec.abs_tol, spec.rel_tol * std::abs(total)) &&
         splits < spec.max_subdivisions) {
    // split the worst panel
    size_t worst = 0;
    for (size_t i = 1; i < panels.size(); ++i)
      if (panels[i].error > panels[worst].error) worst = i;
    Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    if (mid <= p.a || mid >= p.b) break;  // interval at machine resolution
    Panel left = evaluate_panel(f, p.a, mid);
    Panel right = evaluate_panel(f, mid, p.b);
    panels[worst] = left;
    panels.push_back(right);
    ++splits;
    total = 0.0;
    toterr = 0.0;
    for (const auto& q : panels) {
      total += q.value;
      toterr += q.error;
    }
  }
  if (toterr > std::max(spec.abs_tol, spec.rel_tol * std::abs(total)) &&
      toterr > 1e3 * std::max(spec.abs_tol, spec.rel_tol * std::abs(total)))
    throw Error(ErrorKind::ToleranceNotMet,
                "best estimate " + std::to_string(total) + " with error bound " + std::to_string(toterr));
  return {total, toterr};
}

QuadResult integrate_semi_infinite(const std::function<double(double)>& f, double a,
                                   const IntegralSpec& spec) {
  spec.validate();
  const double L = spec.tail_scale;
  std::function<double(double)> g;
  if (spec.tail_map == TailMap::Exp) {
    g = [&f, a, L](double t) {
      const double x = a - L * std::log1p(-t);
      return f(x) * L / (1.0 - t);
    };
  } else {
    g = [&f, a, L](double t) {
      const double om = 1.0 - t;
      const double x = a + L * t / om;
      return f(x) * L / (om * om);
    };
  }
  // probe the mapped tail: a decaying integrand must vanish toward t -> 1
  const double probe_near = std::abs(g(0.999));
  const double probe_far = std::abs(g(0.999999));
  if (probe_far > 1e3 * (probe_near + 1e-300) && probe_far > 1e-12)
    throw Error(ErrorKind::NonDecayingIntegrand, "tail does not decay under the selected map");
  return integrate_finite(g, 0.0, 1.0 - 1e-12, spec);
}

double wick_integrate(const std::function<Complex(double)>& f_iu, const IntegralSpec& spec) {
  spec.validate();
  // precondition: real on the imaginary axis (sampled)
  for (double u : {0.17, 1.3, 7.9}) {
    const Complex v = f_iu(u);
    if (std::abs(v.imag()) > 1e-10 * std::abs(v.real()) + 1e-13)
      throw Error(ErrorKind::InvalidParameter,
                  "integrand not real on the imaginary axis at u=" + std::to_string(u));
  }
  auto g = [&f_iu](double u) { return f_iu(u).real(); };
  return integrate_semi_infinite(g, 0.0, spec).value;
}

Complex radial_integrate(const std::function<Complex(double)>& kernel, double r_min,
                         const IntegralSpec& spec) {
  auto re = [&kernel](double r) { return kernel(r).real(); };
  auto im = [&kernel](double r) { return kernel(r).imag(); };
  const double vr = integrate_semi_infinite(re, r_min, spec).value;
  const double vi = integrate_semi_infinite(im, r_min, spec).value;
  return {vr, vi};
}

Complex radial_integrate_rotated(const std::function<Complex(Complex)>& kernel, double r_min,
                                 const IntegralSpec& spec) {
  auto rot = [&kernel, r_min](double s) { return Complex(0, 1) * kernel(Complex(r_min, s)); };
  auto re = [&rot](double s) { return rot(s).real(); };
  auto im = [&rot](double s) { return rot(s).imag(); };
  const double vr = integrate_semi_infinite(re, 0.0, spec).value;
  const double vi = integrate_semi_infinite(im, 0.0, spec).value;
  return {vr, vi};
}

Complex momentum_integrate(const std::function<Complex(double)>& f, const IntegralSpec& spec) {
  constexpr double norm = 1.0 / (2.0 * M_PI * M_PI);
  auto re = [&f](double q) { return q * q * f(q).real(); };
  auto im = [&f](double q) { return q * q * f(q).imag(); };
  const double vr = integrate_semi_infinite(re, 0.0, spec).value;
  const double vi = integrate_semi_infinite(im, 0.0, spec).value;
  return Complex(vr, vi) * norm;
}

double momentum_mode_count(double rho) { return rho; }

double oscillatory_tail_integrate(const std::function<double(double)>& f, double a,
                                  double half_period, const IntegralSpec& spec,
                                  int n_panels, int levels) {
  spec.validate();
  if (!(half_period > 0.0))
    throw_error(ErrorKind::InvalidParameter, "half_period must be positive");
  IntegralSpec panel_spec = spec;
  panel_spec.max_subdivisions = std::max(16, spec.max_subdivisions / 8);
  std::vector<double> partial(n_panels);
  double x = a;
  double sum = 0.0;
  for (int i = 0; i < n_panels; ++i) {
    sum += integrate_finite(f, x, x + half_period, panel_spec).value;
    partial[i] = sum;
    x += half_period;
  }
  // iterated averaging of the partial sums removes the asymptotically
  // periodic oscillation order by order
  std::vector<double> s = partial;
  for (int l = 0; l < levels && s.size() > 1; ++l) {
    for (size_t i = 0; i + 1 < s.size(); ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
    s.pop_back();
  }
  return s.back();
}

GaussRule::GaussRule(int n) : x(n), w(n) {
  // Newton iteration on Legendre polynomials
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

void GaussRule::mapped(double a, double b, std::vector<double>& xs, std::vector<double>& ws) const {
  const size_t n = x.size();
  xs.resize(n);
  ws.resize(n);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (size_t i = 0; i < n; ++i) {
    xs[i] = c + h * x[i];
    ws[i] = h * w[i];
  }
}

}  // namespace vacua
