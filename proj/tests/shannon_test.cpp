#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "csitq/channels.hpp"
#include "csitq/conversion.hpp"
#include "csitq/entropy.hpp"
#include "csitq/shannon.hpp"
#include "csitq/util.hpp"

using namespace csitq;

TEST_CASE("strategy channel of the pentagon has 32 strategies") {
  auto ch = graph_channel(cycle_graph(5), uniform_dist(5));
  auto w = shannon_strategy_channel(ch);
  CHECK(w.strategy_count == 32);
  CHECK(w.y_card == 5);
  // Rows are distributions.
  for (int t = 0; t < w.strategy_count; ++t) {
    double sum = 0.0;
    for (int y = 0; y < w.y_card; ++y) sum += w.prob(t, y);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("strategy codec round trips") {
  auto ch = graph_channel(complete_graph(4), uniform_dist(6));
  auto w = shannon_strategy_channel(ch);
  CHECK(w.strategy_count == 64);
  for (int t : {0, 1, 17, 63}) {
    CHECK(w.strategy_index(w.strategy_map(t)) == t);
  }
}

TEST_CASE("single-state channel reduces to itself") {
  // BSC with crossover 0.1 embedded with |S| = 1.
  auto ch = ChannelWithState::from_kernel(2, 2, 1, {0.9, 0.1, 0.1, 0.9}, {1.0});
  auto w = shannon_strategy_channel(ch);
  REQUIRE(w.strategy_count == 2);
  for (int t = 0; t < 2; ++t) {
    for (int y = 0; y < 2; ++y) CHECK(w.prob(t, y) == ch.prob(0, t, y));
  }
}

TEST_CASE("constant strategy on K4 counts smaller endpoints") {
  auto ch = graph_channel(complete_graph(4), uniform_dist(6));
  auto w = shannon_strategy_channel(ch);
  // t(s) = 0 for all s: output mass proportional to the number of edges whose
  // smaller endpoint is y.
  int t0 = w.strategy_index({0, 0, 0, 0, 0, 0});
  CHECK(w.prob(t0, 0) == doctest::Approx(3.0 / 6).epsilon(1e-15));
  CHECK(w.prob(t0, 1) == doctest::Approx(2.0 / 6).epsilon(1e-15));
  CHECK(w.prob(t0, 2) == doctest::Approx(1.0 / 6).epsilon(1e-15));
  CHECK(w.prob(t0, 3) == 0.0);
}

TEST_CASE("strategy count overflow guard") {
  // 2^30 strategies is past the 2^26 cap.
  auto ch = graph_channel(cycle_graph(30), uniform_dist(30));
  CHECK_THROWS_AS(shannon_strategy_channel(ch), std::invalid_argument);
}

TEST_CASE("blahut-arimoto on a noiseless binary channel") {
  auto ch = ChannelWithState::from_kernel(2, 2, 1, {1.0, 0.0, 0.0, 1.0}, {1.0});
  auto report = blahut_arimoto(shannon_strategy_channel(ch));
  CHECK(report.capacity_bits == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(report.converged);
  CHECK(report.gap_bound >= 0.0);
}

TEST_CASE("blahut-arimoto reproduces the pentagon capacity") {
  auto ch = graph_channel(cycle_graph(5), uniform_dist(5));
  auto report = blahut_arimoto(shannon_strategy_channel(ch));
  CHECK(report.capacity_bits == doctest::Approx(0.8).epsilon(1e-6));
  CHECK(report.capacity_bits <= std::log2(5.0) + 1e-9);
}

TEST_CASE("non-convergence still reports best bounds") {
  auto ch = noisy_version(graph_channel(complete_graph(5), uniform_dist(10)), 0.5);
  auto report = blahut_arimoto(shannon_strategy_channel(ch), 1e-12, 3);
  CHECK_FALSE(report.converged);
  CHECK(report.iterations == 3);
  CHECK(report.gap_bound > 0.0);
  CHECK(report.capacity_bits > 0.0);
  CHECK(report.capacity_bits <= std::log2(5.0) + 1e-9);
}

TEST_CASE("lower bound is monotone across iterations") {
  auto ch = noisy_version(graph_channel(complete_graph(4), uniform_dist(6)), 0.3);
  std::vector<double> trace;
  blahut_arimoto(shannon_strategy_channel(ch), 1e-9, 2000, &trace);
  REQUIRE(trace.size() > 2);
  for (size_t i = 1; i < trace.size(); ++i) CHECK(trace[i] >= trace[i - 1] - 1e-12);
}

TEST_CASE("capacity is invariant under output relabeling") {
  auto ch = noisy_version(graph_channel(cycle_graph(5), uniform_dist(5)), 0.6);
  auto base = blahut_arimoto(shannon_strategy_channel(ch));
  // Cyclic relabeling y -> y+2 (mod 5).
  std::vector<double> permuted(ch.kernel.size());
  for (int s = 0; s < ch.s_card; ++s) {
    for (int x = 0; x < ch.x_card; ++x) {
      for (int y = 0; y < ch.y_card; ++y) {
        permuted[(static_cast<size_t>(s) * 2 + x) * 5 + (y + 2) % 5] = ch.prob(s, x, y);
      }
    }
  }
  auto relabeled = ChannelWithState::from_kernel(2, 5, 5, permuted, ch.state_dist);
  auto other = blahut_arimoto(shannon_strategy_channel(relabeled));
  CHECK(base.capacity_bits == doctest::Approx(other.capacity_bits).epsilon(1e-8));
}

TEST_CASE("closed form complete-graph capacity") {
  CHECK(complete_graph_capacity(4, 0.0) == 0.0);
  // Direct evaluation at (4, 0.1); the display bound is 4.02e-3.
  CHECK(complete_graph_capacity(4, 0.1) == doctest::Approx(4.0136e-3).epsilon(1e-3));
  CHECK(complete_graph_capacity(4, 0.1) <= 4.02e-3);
  // p=1 value cross-checked against the exhaustive entropy minimizer.
  auto oracle = min_output_entropy_bruteforce(4, 1.0);
  CHECK(complete_graph_capacity(4, 1.0) ==
        doctest::Approx(2.0 - oracle.value).epsilon(1e-12));
}

TEST_CASE("closed form equals blahut-arimoto on the noisy complete graph") {
  for (int m : {3, 4, 5}) {
    auto channel = km_channel(m);
    for (double p : {0.1, 0.3, 0.5, 0.8, 1.0}) {
      auto report = blahut_arimoto(shannon_strategy_channel(noisy_version(channel, p)));
      CHECK(report.capacity_bits ==
            doctest::Approx(complete_graph_capacity(m, p)).epsilon(1e-6));
    }
  }
}

TEST_CASE("uniform pair of complement strategies achieves 0.8 on the pentagon") {
  // Strategies t(s) = s mod 2 and its complement, each with weight 1/2, over
  // the y = x + s (mod 5) labeling.
  auto w = shannon_strategy_channel(c5_channel());
  int t0 = w.strategy_index({0, 1, 0, 1, 0});
  int t1 = w.strategy_index({1, 0, 1, 0, 1});
  std::vector<double> joint(2 * 5, 0.0);
  for (int y = 0; y < 5; ++y) {
    joint[y] = 0.5 * w.prob(t0, y);
    joint[5 + y] = 0.5 * w.prob(t1, y);
  }
  CHECK(mutual_information(joint, 2, 5) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("exhaustive output-entropy minimizer matches the closed form") {
  for (int m : {3, 4, 5, 6}) {
    for (double p : {0.0, 0.1, 0.5, 1.0}) {
      auto result = min_output_entropy_bruteforce(m, p);
      double closed = std::log2(static_cast<double>(m)) - complete_graph_capacity(m, p);
      CHECK(result.value == doctest::Approx(closed).epsilon(1e-12));
      CHECK(result.enumerated == (uint64_t{1} << (m * (m - 1) / 2)));
    }
  }
}

TEST_CASE("minimizer concentrates mass as a staircase") {
  for (double p : {0.1, 1.0}) {
    auto result = min_output_entropy_bruteforce(3, p);
    std::vector<double> sorted = result.v;
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    CHECK(sorted[0] == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK(sorted[1] == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(sorted[2] == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("at p=0 every selection is optimal and the smallest encoding wins") {
  auto result = min_output_entropy_bruteforce(4, 0.0);
  CHECK(result.value == doctest::Approx(2.0).epsilon(1e-12));
  for (uint8_t bit : result.choice) CHECK(bit == 0);
}

TEST_CASE("deterministic under different worker counts") {
  auto a = min_output_entropy_bruteforce(5, 0.37, 1);
  auto b = min_output_entropy_bruteforce(5, 0.37, 7);
  CHECK(a.value == b.value);
  CHECK(a.choice == b.choice);
}

TEST_CASE("worker count respects the environment cap") {
  setenv("CSITQ_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  setenv("CSITQ_THREADS", "junk", 1);
  CHECK(worker_count() >= 1);
  unsetenv("CSITQ_THREADS");
  CHECK(worker_count() >= 1);
}

TEST_CASE("enumeration bound") {
  CHECK_THROWS_AS(min_output_entropy_bruteforce(8, 0.5), std::invalid_argument);
  CHECK_NOTHROW(min_output_entropy_bruteforce(7, 0.5));
}
