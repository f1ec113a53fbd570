#include "vacua/tables.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace vacua {

double SampledCurve::operator()(double uu) const {
  const std::size_t n = u.size();
  if (n == 0) throw_error(ErrorKind::InvalidParameter, "empty sampled curve");
  if (uu <= u.front()) return v.front();
  if (uu >= u.back()) return 0.0;
  const auto it = std::upper_bound(u.begin(), u.end(), uu);
  const std::size_t i = static_cast<std::size_t>(it - u.begin()) - 1;
  const double h = u[i + 1] - u[i];
  const double t = (uu - u[i]) / h;
  // Fritsch-Carlson slopes keep the interpolant monotone on monotone data
  auto slope = [&](std::size_t j) {
    if (j == 0) return (v[1] - v[0]) / (u[1] - u[0]);
    if (j == n - 1) return (v[n - 1] - v[n - 2]) / (u[n - 1] - u[n - 2]);
    const double dl = (v[j] - v[j - 1]) / (u[j] - u[j - 1]);
    const double dr = (v[j + 1] - v[j]) / (u[j + 1] - u[j]);
    if (dl * dr <= 0.0) return 0.0;
    return 2.0 * dl * dr / (dl + dr);
  };
  const double m0 = slope(i) * h, m1 = slope(i + 1) * h;
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * v[i] + (t3 - 2 * t2 + t) * m0 + (-2 * t3 + 3 * t2) * v[i + 1] +
         (t3 - t2) * m1;
}

SampledCurve load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_error(ErrorKind::InvalidParameter, "cannot open " + path);
  SampledCurve c;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    double a, b;
    char comma = 0;
    if (ss >> a) {
      ss >> comma;
      if (comma != ',' ) ss.putback(comma);
      if (ss >> b) {
        c.u.push_back(a);
        c.v.push_back(b);
      }
    }
  }
  if (c.u.size() < 2) throw_error(ErrorKind::InvalidParameter, "curve needs at least two rows");
  if (!std::is_sorted(c.u.begin(), c.u.end()))
    throw_error(ErrorKind::InvalidParameter, "curve frequencies must be increasing");
  return c;
}

}  // namespace vacua
