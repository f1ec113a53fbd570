#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace vacua {

struct Provenance {
  std::string formula_path;          // closed-form | quadrature | mode-sum | ...
  double cutoff = std::nan("");      // UV cutoff if one entered the value
  std::vector<std::string> notes;
  std::map<std::string, double> extras;  // comparators, regulated pieces, ratios
};

// Shifts are reported in units of hbar*omega0, densities as coefficients of
// rho*hbar*omega0 (i.e. per dipole); `units` records which.
struct EnergyResult {
  double value = 0.0;
  std::string units = "hbar*omega0";
  std::map<std::string, double> breakdown;  // sums to value
  double error_estimate = 0.0;
  Provenance provenance;

  double breakdown_sum() const {
    double s = 0.0;
    for (const auto& [k, v] : breakdown) s += v;
    return s;
  }
};

}  // namespace vacua
