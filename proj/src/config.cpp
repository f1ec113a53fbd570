#include "vacua/config.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "vacua/lamb.hpp"
#include "vacua/polarizability.hpp"

namespace vacua {

namespace {

// real-axis-free evaluation: P, Q and the diagonal scalar on the imaginary axis
struct WickPQ {
  double P, Q;
};

WickPQ pq_wick(double r, double u) {
  const double x = u * r;
  const double e = std::exp(-x);
  const double pref = -e / (4.0 * M_PI * r);
  return {pref * (1.0 + 1.0 / x + 1.0 / (x * x)), pref * (-2.0 / x - 2.0 / (x * x))};
}

double splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  z = z ^ (z >> 31);
  return (z >> 11) * 0x1.0p-53;
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ull * (index + 1));
  // one scramble round keeps streams decorrelated
  s = (s ^ (s >> 30)) * 0xbf58476d1ce4e5b9ull;
  return s ^ (s >> 27);
}

// normalized interaction matrix at imaginary frequency u:
//   Mtil = I + k^2 a0 G(r_ij)/diag,  diag = 1 - a0 u^3/(6 pi)
Eigen::MatrixXd interaction_matrix(const DipoleConfiguration& cfg, double u) {
  const std::size_t n = cfg.size();
  const double a0 = alpha_bare(Complex(0, u), cfg.species).real();
  const double diag = 1.0 - a0 * u * u * u / (6.0 * M_PI);
  if (!(diag > 0.0))
    throw Error(ErrorKind::MatrixSingular, "diagonal renormalization factor vanished");
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(3 * n, 3 * n);
  const double k2a = -u * u * a0 / diag;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Eigen::Vector3d d = cfg.displacement(i, j);
      const double r = d.norm();
      const WickPQ pq = pq_wick(r, u);
      const Eigen::Vector3d nh = d / r;
      const Eigen::Matrix3d blk =
          k2a * (pq.P * (Eigen::Matrix3d::Identity() - nh * nh.transpose()) +
                 pq.Q * (nh * nh.transpose()));
      m.block<3, 3>(3 * i, 3 * j) = blk;
      m.block<3, 3>(3 * j, 3 * i) = blk;
    }
  }
  return m;
}

double logdet_spd(const Eigen::MatrixXd& m) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success)
    throw Error(ErrorKind::MatrixSingular,
                "interaction matrix not positive definite on the imaginary axis");
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

// spurious pole of the diagonal normalization sits at a0(iu) u^3 = 6 pi; the
// physical integrand is exponentially dead well below it
double safe_ucap(const DipoleConfiguration& cfg, double dmin) {
  const double g = cfg.species.gamma_ratio;
  const double upole = 3.0 / g;  // large-u solution of g u = 3
  const double uneed = std::max(30.0, 60.0 / std::max(dmin, 1e-3));
  return std::min(uneed, 0.5 * upole);
}

}  // namespace

double DipoleConfiguration::volume() const {
  if (boundary == Boundary::Periodic) return box * box * box;
  return 0.0;
}

Eigen::Vector3d DipoleConfiguration::displacement(std::size_t i, std::size_t j) const {
  Eigen::Vector3d d = positions[j] - positions[i];
  if (boundary == Boundary::Periodic) {
    for (int a = 0; a < 3; ++a) d[a] -= box * std::round(d[a] / box);
  }
  return d;
}

void DipoleConfiguration::validate(std::size_t n_max) const {
  species.validate();
  if (size() > n_max)
    throw_error(ErrorKind::InvalidParameter,
                "N = " + std::to_string(size()) + " exceeds the dense-matrix limit " +
                    std::to_string(n_max));
  if (!(xi > 0.0)) throw_error(ErrorKind::InvalidParameter, "xi must be positive");
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (displacement(i, j).norm() < xi * (1.0 - 1e-12))
        throw_error(ErrorKind::InvalidParameter,
                    "hard-sphere overlap between dipoles " + std::to_string(i) + " and " +
                        std::to_string(j));
}

DipoleConfiguration sample_hard_sphere(std::size_t n, double rho_bar, double xi,
                                       std::uint64_t seed, const DipoleSpecies& species) {
  species.validate();
  if (!(xi > 0.0) || !(rho_bar > 0.0))
    throw_error(ErrorKind::InvalidParameter, "xi and rho_bar must be positive");
  const double packing = M_PI / 6.0 * rho_bar;
  if (packing > 0.3)
    throw Error(ErrorKind::PackingTooDense,
                "packing fraction " + std::to_string(packing) + " too dense for RSA");
  DipoleConfiguration cfg;
  cfg.species = species;
  cfg.xi = xi;
  cfg.box = xi * std::cbrt(static_cast<double>(n) / rho_bar);
  cfg.boundary = Boundary::Periodic;
  cfg.positions.reserve(n);
  std::uint64_t state = stream_seed(seed, 0);
  const std::size_t max_attempts = 20000 * n + 100000;
  std::size_t attempts = 0;
  while (cfg.positions.size() < n) {
    if (++attempts > max_attempts)
      throw Error(ErrorKind::PackingTooDense, "random sequential addition did not terminate");
    Eigen::Vector3d p(splitmix64(state) * cfg.box, splitmix64(state) * cfg.box,
                      splitmix64(state) * cfg.box);
    bool ok = true;
    for (const auto& q : cfg.positions) {
      Eigen::Vector3d d = p - q;
      for (int a = 0; a < 3; ++a) d[a] -= cfg.box * std::round(d[a] / cfg.box);
      if (d.squaredNorm() < xi * xi) {
        ok = false;
        break;
      }
    }
    if (ok) cfg.positions.push_back(p);
  }
  return cfg;
}

EnergyResult config_vacuum_energy(const DipoleConfiguration& cfg, const ConfigEnergyOptions& opts) {
  cfg.validate();
  const std::size_t n = cfg.size();
  EnergyResult out;
  out.units = "rho*hbar*omega0";
  const EnergyResult f0 = free_space_lamb_energy(0.0, cfg.species, opts.spec);
  out.breakdown["free_space"] = (n > 0) ? f0.value : 0.0;
  if (n < 2) {
    out.breakdown["interaction"] = 0.0;
    out.value = out.breakdown_sum();
    out.provenance.formula_path = "free-space only";
    return out;
  }
  double dmin = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) dmin = std::min(dmin, cfg.displacement(i, j).norm());
  const double ucap = safe_ucap(cfg, dmin);
  auto integrand = [&](double u) { return logdet_spd(interaction_matrix(cfg, u)); };
  IntegralSpec s = opts.spec;
  s.abs_tol = std::min(s.abs_tol, 1e-26);
  double value, err;
  if (opts.grid_nodes > 0) {
    GaussRule rule(opts.grid_nodes);
    std::vector<double> xs, ws;
    rule.mapped(0.0, 1.0, xs, ws);
    value = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double t = xs[i];
      const double u = ucap * t * t;  // quadratic map crowds nodes at small u
      value += ws[i] * 2.0 * ucap * t * integrand(u);
    }
    err = 0.0;
  } else {
    const QuadResult q = integrate_finite(integrand, 1e-8, ucap, s);
    value = q.value;
    err = q.error;
  }
  out.breakdown["interaction"] = value / (2.0 * M_PI * n);
  out.value = out.breakdown_sum();
  out.error_estimate = err / (2.0 * M_PI * n) + f0.error_estimate;
  out.provenance.formula_path = "log-determinant of the normalized interaction matrix";
  out.provenance.extras["u_cap"] = ucap;
  out.provenance.extras["min_distance"] = dmin;
  if (cfg.boundary == Boundary::Periodic) out.provenance.extras["box"] = cfg.box;
  return out;
}

EnergyResult config_lamb_shift(const DipoleConfiguration& cfg, std::size_t i,
                               const ConfigEnergyOptions& opts) {
  cfg.validate();
  if (i >= cfg.size()) throw_error(ErrorKind::InvalidParameter, "dipole index out of range");
  const std::size_t n = cfg.size();
  EnergyResult out;
  out.units = "hbar*omega0";
  const EnergyResult f0 = free_space_lamb_shift(cfg.species, opts.spec);
  out.breakdown["free_space"] = f0.value;
  if (n < 2) {
    out.breakdown["interaction"] = 0.0;
    out.value = out.breakdown_sum();
    return out;
  }
  double dmin = std::numeric_limits<double>::max();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) dmin = std::min(dmin, cfg.displacement(a, b).norm());
  const double ucap = safe_ucap(cfg, dmin);

  auto integrand = [&](double u) {
    const double a0 = alpha_bare(Complex(0, u), cfg.species).real();
    const double diag = 1.0 - a0 * u * u * u / (6.0 * M_PI);
    // pi = a0 A^{-1}, A = diag I + offdiag(k^2 a0 G); solve for the i-th block
    Eigen::MatrixXd A = diag * interaction_matrix(cfg, u);
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(3 * n, 3);
    rhs.block<3, 3>(3 * i, 0).setIdentity();
    Eigen::MatrixXd X = A.ldlt().solve(rhs);
    // k^2 sum_j Tr[G'(R_i, R_j) pi(R_j, R_i)]
    double tr = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      Eigen::Matrix3d Gij;
      if (j == i) {
        Gij = (u / (6.0 * M_PI)) * Eigen::Matrix3d::Identity();  // i Im G0(0) continued
      } else {
        const Eigen::Vector3d d = cfg.displacement(i, j);
        const double r = d.norm();
        const WickPQ pq = pq_wick(r, u);
        const Eigen::Vector3d nh = d / r;
        Gij = pq.P * (Eigen::Matrix3d::Identity() - nh * nh.transpose()) +
              pq.Q * (nh * nh.transpose());
      }
      tr += (Gij * X.block<3, 3>(3 * j, 0)).trace();
    }
    const double full = -u * u * a0 * tr;
    const double decoupled = a0 * (-u * u * u / (2.0 * M_PI)) / diag;
    return full - decoupled;
  };
  IntegralSpec s = opts.spec;
  s.abs_tol = std::min(s.abs_tol, 1e-26);
  const QuadResult q = integrate_finite(integrand, 1e-8, ucap, s);
  out.breakdown["interaction"] = q.value / (2.0 * M_PI);
  out.value = out.breakdown_sum();
  out.error_estimate = q.error / (2.0 * M_PI) + f0.error_estimate;
  out.provenance.formula_path = "one matrix inversion per frequency node";
  return out;
}

EnsembleStats ensemble_average(std::size_t n, const MediumSpec& medium,
                               const DipoleSpecies& species, std::size_t n_samples,
                               std::uint64_t seed, int threads) {
  medium.validate();
  species.validate();
  if (n_samples < 16)
    throw_error(ErrorKind::InvalidParameter, "ensemble average requires n_samples >= 16");
  if (threads <= 0) {
    if (const char* env = std::getenv("VACUA_THREADS")) threads = std::atoi(env);
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  constexpr int kNodes = 64;
  GaussRule rule(kNodes);
  std::vector<double> ts, ws;
  rule.mapped(0.0, 1.0, ts, ws);
  // shared frequency grid: u = ucap t^2 with the dilute-sample cap
  DipoleConfiguration probe = sample_hard_sphere(n, medium.rho_bar, medium.xi(), seed, species);
  double dmin = std::numeric_limits<double>::max();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) dmin = std::min(dmin, probe.displacement(a, b).norm());
  const double ucap = safe_ucap(probe, std::max(dmin, 0.5 * medium.xi()));
  std::vector<double> us(kNodes), wu(kNodes);
  for (int k = 0; k < kNodes; ++k) {
    us[k] = ucap * ts[k] * ts[k];
    wu[k] = ws[k] * 2.0 * ucap * ts[k];
  }

  const std::size_t dim = 3 * n;
  std::vector<double> sample_energy(n_samples, 0.0);
  std::vector<Eigen::MatrixXd> msum_total(kNodes, Eigen::MatrixXd::Zero(dim, dim));

  const int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(n_samples)));
  std::vector<std::vector<Eigen::MatrixXd>> partial(
      nthreads, std::vector<Eigen::MatrixXd>(kNodes, Eigen::MatrixXd::Zero(dim, dim)));
  std::vector<std::thread> pool;
  const std::size_t chunk = (n_samples + nthreads - 1) / nthreads;
  for (int t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t]() {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(n_samples, lo + chunk);
      for (std::size_t sidx = lo; sidx < hi; ++sidx) {
        DipoleConfiguration cfg =
            sample_hard_sphere(n, medium.rho_bar, medium.xi(), stream_seed(seed, sidx + 1), species);
        double e = 0.0;
        for (int k = 0; k < kNodes; ++k) {
          Eigen::MatrixXd m = interaction_matrix(cfg, us[k]);
          partial[t][k] += m;
          e += wu[k] * logdet_spd(m);
        }
        sample_energy[sidx] = e / (2.0 * M_PI * n);
      }
    });
  }
  for (auto& th : pool) th.join();
  for (int t = 0; t < nthreads; ++t)
    for (int k = 0; k < kNodes; ++k) msum_total[k] += partial[t][k];

  EnsembleStats out;
  out.n_samples = n_samples;
  double mean = 0.0;
  for (double e : sample_energy) mean += e;
  mean /= static_cast<double>(n_samples);
  double var = 0.0;
  for (double e : sample_energy) var += (e - mean) * (e - mean);
  var /= static_cast<double>(n_samples - 1);
  out.stderr_mean = std::sqrt(var / static_cast<double>(n_samples));
  out.mean.value = mean;
  out.mean.units = "rho*hbar*omega0";
  out.mean.breakdown["interaction"] = mean;
  out.mean.error_estimate = out.stderr_mean;
  out.mean.provenance.formula_path = "Monte Carlo over RSA hard-sphere samples";

  out.avg_of_logdet = mean;
  double ld_avg = 0.0;
  for (int k = 0; k < kNodes; ++k)
    ld_avg += wu[k] * logdet_spd(msum_total[k] / static_cast<double>(n_samples));
  out.logdet_of_avg = ld_avg / (2.0 * M_PI * n);
  out.ineq_gap = std::abs(out.avg_of_logdet - out.logdet_of_avg);

  // frequency-grid truncation estimate from one adaptive reference
  ConfigEnergyOptions ref;
  ref.spec.rel_tol = 1e-9;
  const EnergyResult ref_e = config_vacuum_energy(probe, ref);
  double probe_grid = 0.0;
  for (int k = 0; k < kNodes; ++k)
    probe_grid += wu[k] * logdet_spd(interaction_matrix(probe, us[k]));
  probe_grid /= (2.0 * M_PI * n);
  out.grid_error = std::abs(probe_grid - ref_e.breakdown.at("interaction"));
  return out;
}

DipoleConfiguration load_configuration(const std::string& path, const DipoleSpecies& species) {
  std::ifstream in(path);
  if (!in) throw_error(ErrorKind::InvalidParameter, "cannot open " + path);
  std::string header;
  std::getline(in, header);
  double xi = 0.0;
  std::size_t n = 0;
  if (std::sscanf(header.c_str(), "# xi=%lf n=%zu", &xi, &n) != 2)
    throw_error(ErrorKind::InvalidParameter, "bad position-table header in " + path);
  DipoleConfiguration cfg;
  cfg.species = species;
  cfg.xi = xi;
  cfg.boundary = Boundary::Open;
  cfg.positions.reserve(n);
  double x, y, z;
  while (in >> x >> y >> z) cfg.positions.emplace_back(x, y, z);
  if (cfg.positions.size() != n)
    throw_error(ErrorKind::InvalidParameter, "position count does not match header in " + path);
  return cfg;
}

void save_configuration(const DipoleConfiguration& cfg, const std::string& path) {
  std::ofstream outf(path);
  if (!outf) throw_error(ErrorKind::InvalidParameter, "cannot write " + path);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "# xi=%.17g n=%zu\n", cfg.xi, cfg.size());
  outf << buf;
  for (const auto& p : cfg.positions) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", p[0], p[1], p[2]);
    outf << buf;
  }
}

}  // namespace vacua
