#include "csitq/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "csitq/conversion.hpp"
#include "csitq/shannon.hpp"

namespace csitq {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

double gain_ratio_limit(int m) {
  if (m < 3) throw std::invalid_argument("gain_ratio_limit: m must be >= 3");
  double cot = 1.0 / std::tan(kPi / (2.0 * m));
  return 3.0 * cot * cot / (static_cast<double>(m) * m - 1.0);
}

RatioCurve gain_ratio_curve(int m, std::vector<double> p_values) {
  if (m < 3) throw std::invalid_argument("gain_ratio_curve: m must be >= 3");
  for (double p : p_values) {
    if (!(p > 0.0 && p <= 1.0)) {
      throw std::invalid_argument(
          "gain_ratio_curve: p must lie in (0,1]; the p -> 0 ratio is a limit, use gain_ratio_limit");
    }
  }
  std::sort(p_values.begin(), p_values.end(), std::greater<double>());
  p_values.erase(std::unique(p_values.begin(), p_values.end()), p_values.end());

  RatioCurve curve;
  curve.m = m;
  curve.samples.reserve(p_values.size());
  for (double p : p_values) {
    RatioSample s;
    s.p = p;
    s.classical = complete_graph_capacity(m, p);
    s.ea_rate = assisted_rate_complete_graph(m, p);
    s.ratio = s.ea_rate / s.classical;
    curve.samples.push_back(s);
  }
  return curve;
}

std::vector<double> default_p_grid() {
  std::vector<double> grid;
  for (int k = 0; k < 50; ++k) {
    grid.push_back(std::pow(10.0, -5.0 + 5.0 * k / 49.0));
  }
  grid.push_back(0.1);
  std::sort(grid.begin(), grid.end(), std::greater<double>());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace csitq
