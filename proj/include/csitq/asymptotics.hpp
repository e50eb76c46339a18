#pragma once

#include <vector>

namespace csitq {

struct RatioSample {
  double p = 0.0;
  double classical = 0.0;
  double ea_rate = 0.0;
  double ratio = 0.0;
};

/// Gain curve of the noisy complete-graph channel; samples are ordered with
/// p strictly decreasing toward 0.
struct RatioCurve {
  int m = 0;
  std::vector<RatioSample> samples;
};

/// Small-noise limit of the assisted-over-classical rate ratio:
/// 3 cot^2(pi/2m) / (m^2 - 1).
double gain_ratio_limit(int m);

/// Evaluates (classical, assisted, ratio) at each p in (0, 1]. p = 0 is
/// rejected: the ratio there is a limit, not a value; use gain_ratio_limit.
RatioCurve gain_ratio_curve(int m, std::vector<double> p_values);

/// Default logarithmic grid, 1e-5 .. 1, 50 points, with p = 0.1 included so
/// fixed-row lookups are exact. Descending.
std::vector<double> default_p_grid();

}  // namespace csitq
