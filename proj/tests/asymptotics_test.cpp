#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>

#include "csitq/asymptotics.hpp"
#include "csitq/conversion.hpp"
#include "csitq/entropy.hpp"
#include "csitq/shannon.hpp"

using namespace csitq;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("closed-form gain ratio limit") {
  // cot(pi/6) = sqrt(3): 3 * 3 / 8 = 9/8.
  CHECK(gain_ratio_limit(3) == doctest::Approx(1.125).epsilon(1e-12));
  const double twelve_over_pi2 = 12.0 / (kPi * kPi);
  CHECK(twelve_over_pi2 > 1.2158);
  CHECK(gain_ratio_limit(100) == doctest::Approx(twelve_over_pi2).epsilon(5e-3));
  CHECK(std::abs(gain_ratio_limit(1000) - twelve_over_pi2) < 1e-3 * twelve_over_pi2);
}

TEST_CASE("limit is increasing in m and bounded by 12/pi^2") {
  const double bound = 12.0 / (kPi * kPi);
  double prev = 0.0;
  for (int m = 3; m <= 10000; m = m < 20 ? m + 1 : m * 3) {
    double g = gain_ratio_limit(m);
    CHECK(g > prev);
    CHECK(g < bound);
    prev = g;
  }
}

TEST_CASE("numeric ratio approaches the closed form at small p") {
  for (int m : {3, 8, 16, 64}) {
    auto curve = gain_ratio_curve(m, {1e-4});
    CHECK(std::abs(curve.samples.front().ratio - gain_ratio_limit(m)) <
          0.01 * gain_ratio_limit(m));
  }
  // Tighter p only helps.
  auto fine = gain_ratio_curve(8, {1e-3, 1e-4, 1e-5});
  double err_prev = 1e9;
  for (const auto& s : fine.samples) {
    double err = std::abs(s.ratio - gain_ratio_limit(8));
    CHECK(err < err_prev + 1e-12);
    err_prev = err;
  }
}

TEST_CASE("ratio at p=1 is the max-form ratio") {
  for (int m : {3, 4, 8}) {
    auto curve = gain_ratio_curve(m, {1.0});
    double classical = complete_graph_capacity(m, 1.0);
    double converted = assisted_rate(complete_graph_agree(m, 1.0));
    double expect = std::max(1.0, converted / classical);
    CHECK(curve.samples.front().ratio == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("curve ordering and validation") {
  auto curve = gain_ratio_curve(8, {0.5, 1e-3, 1.0, 0.01});
  REQUIRE(curve.samples.size() == 4);
  for (size_t i = 1; i < curve.samples.size(); ++i) {
    CHECK(curve.samples[i].p < curve.samples[i - 1].p);
  }
  CHECK_THROWS_AS(gain_ratio_curve(8, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(gain_ratio_curve(8, {1.5}), std::invalid_argument);
  CHECK_THROWS_AS(gain_ratio_curve(2, {0.5}), std::invalid_argument);
}

TEST_CASE("default grid covers 1e-5..1 and contains 0.1") {
  auto grid = default_p_grid();
  CHECK(grid.front() == 1.0);
  CHECK(grid.back() == doctest::Approx(1e-5).epsilon(1e-12));
  bool has_tenth = false;
  for (double p : grid) has_tenth = has_tenth || p == 0.1;
  CHECK(has_tenth);
  CHECK(grid.size() >= 50);
}

TEST_CASE("small-p expansion of the classical capacity") {
  // capacity = (1/(2 ln 2)) * (m+1)/(3(m-1)) * p^2 + o(p^2); the relative
  // deviation shrinks with p.
  const double ln2 = std::log(2.0);
  for (int m : {4, 8}) {
    double coeff = (m + 1.0) / (3.0 * (m - 1.0)) / (2.0 * ln2);
    double dev3 = std::abs(complete_graph_capacity(m, 1e-3) - coeff * 1e-6) / 1e-6;
    double dev4 = std::abs(complete_graph_capacity(m, 1e-4) - coeff * 1e-8) / 1e-8;
    CHECK(dev4 < dev3);
    CHECK(dev4 < 1e-3 * coeff);
  }
}

TEST_CASE("coefficient identities hold exactly in integers") {
  // sum_k (m - 2k + 1) = 0 and 3 * sum_k (m - 2k + 1)^2 = m(m+1)(m-1),
  // i.e. sum c = 0 and sum c^2 = m(m+1)/(3(m-1)) over c = (m-2k+1)/(m-1).
  for (int m = 3; m <= 64; ++m) {
    int64_t linear = 0, square = 0;
    for (int k = 1; k <= m; ++k) {
      int64_t numerator = m - 2 * k + 1;
      linear += numerator;
      square += numerator * numerator;
    }
    CHECK(linear == 0);
    CHECK(3 * square == static_cast<int64_t>(m) * (m + 1) * (m - 1));
  }
}
