#include "csitq/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace csitq {

namespace {
constexpr double kLn2 = 0.6931471805599453094172321214581766;
}

double xlog2_1p(double x) {
  if (x < -1.0) throw std::invalid_argument("xlog2_1p: argument below -1");
  if (x == -1.0) return 0.0;
  return (1.0 + x) * std::log1p(x) / kLn2;
}

double entropy(std::span<const double> dist) {
  double h = 0.0;
  for (double q : dist) {
    if (q < 0.0) throw std::invalid_argument("entropy: negative entry");
    if (q > 0.0) h -= q * std::log2(q);
  }
  return h;
}

double binary_entropy(double q) {
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("binary_entropy: q outside [0,1]");
  const double pair[2] = {q, 1.0 - q};
  return entropy(pair);
}

double one_minus_hb_at_bias(double eps) {
  if (eps < -0.5 || eps > 0.5) throw std::invalid_argument("one_minus_hb_at_bias: |eps| > 1/2");
  // 1 - H([1/2+eps, 1/2-eps]) = ((1+2e)log2(1+2e) + (1-2e)log2(1-2e)) / 2.
  return 0.5 * (xlog2_1p(2.0 * eps) + xlog2_1p(-2.0 * eps));
}

double mutual_information(std::span<const double> joint, int nx, int ny) {
  if (static_cast<int>(joint.size()) != nx * ny) {
    throw std::invalid_argument("mutual_information: size mismatch");
  }
  std::vector<double> px(nx, 0.0), py(ny, 0.0);
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      double q = joint[x * ny + y];
      if (q < 0.0) throw std::invalid_argument("mutual_information: negative entry");
      px[x] += q;
      py[y] += q;
    }
  }
  return entropy(px) + entropy(py) - entropy(joint);
}

}  // namespace csitq
