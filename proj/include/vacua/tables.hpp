#pragma once

#include <string>
#include <vector>

#include "vacua/errors.hpp"

namespace vacua {

// Two-column sampled curve on the imaginary frequency axis (frequencies in
// omega0 units).  Values interpolate with monotone cubic Hermite segments and
// vanish beyond the last node.
struct SampledCurve {
  std::vector<double> u;
  std::vector<double> v;

  double operator()(double uu) const;
};

SampledCurve load_curve(const std::string& path);

}  // namespace vacua
