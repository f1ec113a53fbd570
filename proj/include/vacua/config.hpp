#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vacua/energy.hpp"
#include "vacua/params.hpp"
#include "vacua/quadrature.hpp"

namespace vacua {

// Exact finite-N machinery: Renne log-determinant energies, per-dipole Lamb
// shifts by matrix inversion, hard-sphere sampling and ensemble averages.

enum class Boundary { Periodic, Open };

struct DipoleConfiguration {
  std::vector<Eigen::Vector3d> positions;  // units c/omega0
  DipoleSpecies species;
  double xi = 0.0;        // exclusion diameter
  double box = 0.0;       // periodic box side; 0 for open clusters
  Boundary boundary = Boundary::Open;

  std::size_t size() const { return positions.size(); }
  double volume() const;    // sampling box volume (or bounding estimate for open)
  void validate(std::size_t n_max = 512) const;

  Eigen::Vector3d displacement(std::size_t i, std::size_t j) const;  // minimum image if periodic
};

// plain-text position table: header "# xi=<value> n=<N>", one xyz row per line
DipoleConfiguration load_configuration(const std::string& path, const DipoleSpecies& species);
void save_configuration(const DipoleConfiguration& cfg, const std::string& path);

// random sequential addition in a periodic cube of volume N/rho
DipoleConfiguration sample_hard_sphere(std::size_t n, double rho_bar, double xi,
                                       std::uint64_t seed, const DipoleSpecies& species);

struct ConfigEnergyOptions {
  IntegralSpec spec{};
  int grid_nodes = 0;  // 0: adaptive; >0: fixed mapped Gauss grid (ensemble mode)
};

// total vacuum energy of the configuration per dipole (units rho hbar omega0):
// free-space part plus the interaction log-determinant
EnergyResult config_vacuum_energy(const DipoleConfiguration& cfg,
                                  const ConfigEnergyOptions& opts = {});

// generalized Lamb shift of dipole i (units hbar omega0)
EnergyResult config_lamb_shift(const DipoleConfiguration& cfg, std::size_t i,
                               const ConfigEnergyOptions& opts = {});

struct EnsembleStats {
  EnergyResult mean;            // interaction energy per dipole
  double stderr_mean = 0.0;
  double avg_of_logdet = 0.0;   // <Tr ln ...>, frequency-integrated
  double logdet_of_avg = 0.0;   // Tr ln <...>
  double ineq_gap = 0.0;        // difference of the two
  double grid_error = 0.0;      // frequency-grid truncation estimate
  std::size_t n_samples = 0;
};

// Monte Carlo average of the interaction energy over hard-sphere samples,
// including both sides of the <Tr ln> vs Tr ln <> comparison on a shared
// 64-node frequency grid.  Deterministic for fixed seed; per-sample RNG
// streams derive from (seed, sample index).
EnsembleStats ensemble_average(std::size_t n, const MediumSpec& medium,
                               const DipoleSpecies& species, std::size_t n_samples,
                               std::uint64_t seed, int threads = 0);

}  // namespace vacua
