#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "csitq/channels.hpp"
#include "csitq/conversion.hpp"

using namespace csitq;

TEST_CASE("graph factories") {
  auto k4 = complete_graph(4);
  std::vector<std::pair<int, int>> expect = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  CHECK(k4.edges == expect);

  auto c3 = cycle_graph(3);
  CHECK(c3.edges == complete_graph(3).edges);

  auto c5 = cycle_graph(5);
  CHECK(c5.edges.size() == 5);
  std::vector<std::pair<int, int>> c5_expect = {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}};
  CHECK(c5.edges == c5_expect);

  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(complete_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(GraphSpec(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(GraphSpec(3, {{0, 1}, {1, 0}}), std::invalid_argument);  // duplicate
  CHECK(petersen_graph().edges.size() == 15);
}

TEST_CASE("graph channel is a deterministic endpoint indicator") {
  auto ch = graph_channel(cycle_graph(5), uniform_dist(5));
  CHECK(ch.x_card == 2);
  CHECK(ch.y_card == 5);
  CHECK(ch.s_card == 5);
  REQUIRE(ch.is_deterministic());
  // State 0 is edge (0,1): input 0 lands on vertex 0.
  CHECK(ch.prob(0, 0, 0) == 1.0);
  for (int y = 1; y < 5; ++y) CHECK(ch.prob(0, 0, y) == 0.0);
  // Every (s,x) slice has exactly one unit entry.
  for (int s = 0; s < ch.s_card; ++s) {
    for (int x = 0; x < 2; ++x) {
      CHECK(ch.support_of(s, x).count() == 1);
      CHECK(ch.prob(s, x, ch.deterministic_output(s, x)) == 1.0);
    }
  }
}

TEST_CASE("oriented cycle channel equals the modular-shift kernel") {
  // Under the labeling state s -> edge (s, s+1 mod m), the kernel is exactly
  // the y = x + s (mod m) table.
  for (int m : {3, 5, 7}) {
    std::vector<std::pair<int, int>> edges;
    for (int s = 0; s < m; ++s) edges.emplace_back(s, (s + 1) % m);
    auto ch = endpoint_channel(m, edges, uniform_dist(m));
    for (int s = 0; s < m; ++s) {
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < m; ++y) {
          double expect = (y == (x + s) % m) ? 1.0 : 0.0;
          CHECK(ch.prob(s, x, y) == expect);
        }
      }
    }
  }
  // c5_channel is exactly the m = 5 instance.
  auto c5 = c5_channel();
  for (int s = 0; s < 5; ++s) {
    CHECK(c5.deterministic_output(s, 0) == s);
    CHECK(c5.deterministic_output(s, 1) == (s + 1) % 5);
  }
}

TEST_CASE("empty edge lists are rejected") {
  CHECK_THROWS_AS(endpoint_channel(4, {}, {}), std::invalid_argument);
}

TEST_CASE("complete graph channel has deterministic slices") {
  auto ch = graph_channel(complete_graph(4), uniform_dist(6));
  CHECK(ch.s_card == 6);
  CHECK(ch.y_card == 4);
  for (int s = 0; s < 6; ++s) {
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 4; ++y) {
        double q = ch.prob(s, x, y);
        CHECK((q == 0.0 || q == 1.0));
      }
    }
  }
}

TEST_CASE("noisy version endpoints and frozen K4 values") {
  auto ch = graph_channel(complete_graph(4), uniform_dist(6));

  auto same = noisy_version(ch, 1.0);
  CHECK(same.kernel == ch.kernel);
  CHECK(same.is_deterministic());

  auto pure_noise = noisy_version(ch, 0.0);
  for (double q : pure_noise.kernel) CHECK(q == 0.25);

  // Direct evaluation of the mixing rule at p = 0.1.
  auto noisy = noisy_version(ch, 0.1);
  std::set<double> values(noisy.kernel.begin(), noisy.kernel.end());
  REQUIRE(values.size() == 2);
  CHECK(*values.begin() == doctest::Approx(0.225).epsilon(1e-15));
  CHECK(*values.rbegin() == doctest::Approx(0.325).epsilon(1e-15));
  CHECK_FALSE(noisy.is_deterministic());

  CHECK_THROWS_AS(noisy_version(ch, -0.01), std::invalid_argument);
  CHECK_THROWS_AS(noisy_version(ch, 1.01), std::invalid_argument);
}

TEST_CASE("noisy version is exactly affine in p") {
  auto ch = graph_channel(cycle_graph(5), uniform_dist(5));
  auto n0 = noisy_version(ch, 0.0);
  auto n1 = noisy_version(ch, 1.0);
  for (double p : {0.1, 0.3, 0.7, 0.95}) {
    auto np = noisy_version(ch, p);
    for (size_t i = 0; i < np.kernel.size(); ++i) {
      CHECK(np.kernel[i] == p * n1.kernel[i] + (1.0 - p) * n0.kernel[i]);
    }
  }
}

TEST_CASE("noisy version composes multiplicatively") {
  auto ch = graph_channel(complete_graph(4), uniform_dist(6));
  for (double p : {0.2, 0.7}) {
    for (double q : {0.05, 0.5, 1.0}) {
      auto twice = noisy_version(noisy_version(ch, p), q);
      auto once = noisy_version(ch, p * q);
      for (size_t i = 0; i < once.kernel.size(); ++i) {
        CHECK(twice.kernel[i] == doctest::Approx(once.kernel[i]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("state distribution validation") {
  auto g = cycle_graph(5);
  CHECK_THROWS_AS(graph_channel(g, std::vector<double>(4, 0.25)), std::invalid_argument);
  CHECK_THROWS_AS(graph_channel(g, std::vector<double>{0.5, 0.5, 0.0, 0.0, 0.0}),
                  std::invalid_argument);
  std::vector<double> tiny = {0.5, 0.5 - 1e-16, 1e-16, 0.0, 0.0};
  CHECK_THROWS_AS(graph_channel(g, tiny), std::invalid_argument);
  std::vector<double> off = {0.3, 0.3, 0.3, 0.05, 0.06};
  CHECK_THROWS_AS(graph_channel(g, off), std::invalid_argument);
}

TEST_CASE("constrained channel substitution rule") {
  // Identity base channel over 3 symbols.
  std::vector<double> rows = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  auto base = StatelessKernel::from_rows(3, 3, rows);

  SUBCASE("all inputs allowed: kernel independent of state") {
    InputConstraintMap cmap;
    cmap.allowed = {{0, 1, 2}, {0, 1, 2}};
    cmap.reference = {0, 1};
    auto ch = constrained_channel(base, cmap, uniform_dist(2));
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) CHECK(ch.prob(0, x, y) == ch.prob(1, x, y));
    }
  }

  SUBCASE("disallowed input behaves as the reference symbol") {
    InputConstraintMap cmap;
    cmap.allowed = {{0, 1}};
    cmap.reference = {1};
    auto ch = constrained_channel(base, cmap, {1.0});
    for (int y = 0; y < 3; ++y) CHECK(ch.prob(0, 2, y) == ch.prob(0, 1, y));
  }

  SUBCASE("invalid maps rejected") {
    InputConstraintMap empty;
    empty.allowed = {{}};
    empty.reference = {0};
    CHECK_THROWS_AS(constrained_channel(base, empty, {1.0}), std::invalid_argument);

    InputConstraintMap bad_ref;
    bad_ref.allowed = {{0, 1}};
    bad_ref.reference = {2};
    CHECK_THROWS_AS(constrained_channel(base, bad_ref, {1.0}), std::invalid_argument);
  }
}

TEST_CASE("kernel rows must be distributions") {
  std::vector<double> bad = {0.6, 0.39};  // sums to 0.99
  CHECK_THROWS_AS(ChannelWithState::from_kernel(1, 2, 1, bad, {1.0}), std::invalid_argument);
  auto errors = [&] {
    ChannelWithState ch;
    ch.x_card = 1;
    ch.y_card = 2;
    ch.s_card = 1;
    ch.kernel = bad;
    ch.state_dist = {1.0};
    return ch.validate();
  }();
  REQUIRE(!errors.empty());
  CHECK(errors.front().find("(s=0, x=0)") != std::string::npos);
}
