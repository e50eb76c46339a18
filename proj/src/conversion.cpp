#include "csitq/conversion.hpp"

#include <cmath>
#include <stdexcept>

#include "csitq/entropy.hpp"
#include "csitq/quantum.hpp"
#include "csitq/rng.hpp"
#include "csitq/shannon.hpp"

namespace csitq {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;

/// Endpoints (y for x=0, y for x=1) of every state of a deterministic
/// binary-input graph channel.
std::vector<std::pair<int, int>> channel_endpoints(const ChannelWithState& ch) {
  if (ch.x_card != 2 || !ch.is_deterministic()) {
    throw std::invalid_argument("conversion: channel is not a (deterministic) graph channel");
  }
  std::vector<std::pair<int, int>> endpoints(ch.s_card);
  for (int s = 0; s < ch.s_card; ++s) {
    endpoints[s] = {ch.deterministic_output(s, 0), ch.deterministic_output(s, 1)};
  }
  return endpoints;
}

void check_scheme(const ChannelWithState& ch, const AngleScheme& ang) {
  if (static_cast<int>(ang.xi.size()) != ch.s_card ||
      static_cast<int>(ang.eta.size()) != ch.y_card) {
    throw std::invalid_argument("conversion: angle scheme does not match channel");
  }
}

void check_noise(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("conversion: p outside [0,1]");
}

}  // namespace

double reduce_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

double perp_bisector_angle(double a, double b) {
  if (a < 0.0 || a >= kTwoPi || b < 0.0 || b >= kTwoPi) {
    throw std::invalid_argument("perp_bisector_angle: angles must lie in [0,2pi)");
  }
  if (a == b) throw std::invalid_argument("perp_bisector_angle: undefined for equal angles");
  return a > b ? reduce_angle((a + b + kPi) / 2.0) : reduce_angle((a + b - kPi) / 2.0);
}

AngleScheme c5_angles() {
  AngleScheme ang;
  const int xi_units[5] = {0, 8, 16, 4, 12};
  const int eta_units[5] = {1, 9, 17, 5, 13};
  for (int i = 0; i < 5; ++i) {
    ang.xi.push_back(xi_units[i] * kPi / 10.0);
    ang.eta.push_back(eta_units[i] * kPi / 10.0);
  }
  return ang;
}

AngleScheme complete_graph_angles(int m) {
  GraphSpec g = complete_graph(m);
  AngleScheme ang;
  ang.eta.resize(m);
  for (int y = 0; y < m; ++y) ang.eta[y] = reduce_angle(kTwoPi * y / m);
  ang.xi.reserve(g.edges.size());
  for (auto [s0, s1] : g.edges) {
    ang.xi.push_back(perp_bisector_angle(ang.eta[s0], ang.eta[s1]));
  }
  return ang;
}

ChannelWithState c5_channel() {
  std::vector<std::pair<int, int>> edges;
  for (int s = 0; s < 5; ++s) edges.emplace_back(s, (s + 1) % 5);
  auto ch = endpoint_channel(5, edges, uniform_dist(5));
  ch.metadata["name"] = "c5";
  return ch;
}

ChannelWithState km_channel(int m) {
  auto ch = graph_channel(complete_graph(m), uniform_dist(m * (m - 1) / 2));
  ch.metadata["name"] = "k" + std::to_string(m);
  return ch;
}

InducedBsc induced_bsc_analytic(const ChannelWithState& ch, double p, const AngleScheme& ang) {
  check_noise(p);
  check_scheme(ch, ang);
  auto endpoints = channel_endpoints(ch);
  double agree0 = 0.0, agree1 = 0.0;
  for (int s = 0; s < ch.s_card; ++s) {
    auto [s0, s1] = endpoints[s];
    double c = std::cos((ang.eta[s0] - ang.xi[s]) / 2.0);
    double sn = std::sin((ang.eta[s1] - ang.xi[s]) / 2.0);
    agree0 += ch.state_dist[s] * c * c;
    agree1 += ch.state_dist[s] * sn * sn;
  }
  InducedBsc bsc;
  bsc.p_agree_given_x0 = p * agree0 + (1.0 - p) * 0.5;
  bsc.p_agree_given_x1 = p * agree1 + (1.0 - p) * 0.5;
  bsc.crossover = 1.0 - bsc.agree();
  return bsc;
}

InducedBsc induced_bsc_quantum(const ChannelWithState& ch, double p, const AngleScheme& ang) {
  check_noise(p);
  check_scheme(ch, ang);
  auto endpoints = channel_endpoints(ch);
  const ComplexMatrix pm = plus_minus_basis();

  // joint[x][agree] over all protocol branches, weighting X' fairly.
  double joint[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
  for (int xprime = 0; xprime < 2; ++xprime) {
    for (int s = 0; s < ch.s_card; ++s) {
      double w_state = 0.5 * ch.state_dist[s];
      PureState prepared = apply_local(bell_pair(), phase_gate(-ang.xi[s]), 0);
      auto u_branches = measure_in_basis(prepared, pm, 0);
      for (int u = 0; u < 2; ++u) {
        if (!u_branches[u].post) continue;
        double w_u = w_state * u_branches[u].probability;
        int x = xprime ^ u;
        int y_det = x == 0 ? endpoints[s].first : endpoints[s].second;
        for (int y = 0; y < ch.y_card; ++y) {
          double w_y = p * (y == y_det ? 1.0 : 0.0) + (1.0 - p) / ch.y_card;
          if (w_y == 0.0) continue;
          PureState received = apply_local(*u_branches[u].post, phase_gate(ang.eta[y]), 1);
          auto y_branches = measure_in_basis(received, pm, 1);
          for (int yprime = 0; yprime < 2; ++yprime) {
            joint[x][yprime == xprime ? 1 : 0] += w_u * w_y * y_branches[yprime].probability;
          }
        }
      }
    }
  }
  InducedBsc bsc;
  bsc.p_agree_given_x0 = joint[0][1] / (joint[0][0] + joint[0][1]);
  bsc.p_agree_given_x1 = joint[1][1] / (joint[1][0] + joint[1][1]);
  bsc.crossover = 1.0 - bsc.agree();
  return bsc;
}

MonteCarloBsc induced_bsc_montecarlo(const ChannelWithState& ch, double p, const AngleScheme& ang,
                                     uint64_t samples, uint64_t seed) {
  check_noise(p);
  check_scheme(ch, ang);
  if (samples < 1) throw std::invalid_argument("induced_bsc_montecarlo: samples must be >= 1");
  auto endpoints = channel_endpoints(ch);

  Rng rng(seed);
  uint64_t n[2] = {0, 0};
  uint64_t hits[2] = {0, 0};
  for (uint64_t i = 0; i < samples; ++i) {
    int xprime = rng.bernoulli(0.5) ? 1 : 0;
    int s = rng.sample(ch.state_dist);
    int u = rng.bernoulli(0.5) ? 1 : 0;
    int x = xprime ^ u;
    int y = x == 0 ? endpoints[s].first : endpoints[s].second;
    if (rng.bernoulli(1.0 - p)) y = rng.next_index(ch.y_card);
    double match_u = std::cos((ang.eta[y] - ang.xi[s]) / 2.0);
    int yprime = rng.bernoulli(match_u * match_u) ? u : 1 - u;
    ++n[x];
    if (yprime == xprime) ++hits[x];
  }

  MonteCarloBsc mc;
  mc.samples = samples;
  mc.seed = seed;
  mc.n_given_x0 = n[0];
  mc.n_given_x1 = n[1];
  double a0 = n[0] ? static_cast<double>(hits[0]) / n[0] : 0.0;
  double a1 = n[1] ? static_cast<double>(hits[1]) / n[1] : 0.0;
  mc.bsc.p_agree_given_x0 = a0;
  mc.bsc.p_agree_given_x1 = a1;
  mc.bsc.crossover = 1.0 - 0.5 * (a0 + a1);
  mc.stderr_given_x0 = n[0] ? std::sqrt(a0 * (1.0 - a0) / n[0]) : 0.0;
  mc.stderr_given_x1 = n[1] ? std::sqrt(a1 * (1.0 - a1) / n[1]) : 0.0;
  return mc;
}

double assisted_rate(double agree) {
  if (!(agree >= 0.0 && agree <= 1.0)) throw std::invalid_argument("assisted_rate: agree outside [0,1]");
  return one_minus_hb_at_bias(agree - 0.5);
}

double complete_graph_bias(int m) {
  if (m < 3) throw std::invalid_argument("complete_graph_bias: m must be >= 3");
  return 1.0 / std::tan(kPi / (2.0 * m)) / (2.0 * (m - 1));
}

double complete_graph_agree(int m, double p) {
  check_noise(p);
  return 0.5 + p * complete_graph_bias(m);
}

double assisted_rate_complete_graph(int m, double p) {
  check_noise(p);
  double converted = one_minus_hb_at_bias(p * complete_graph_bias(m));
  return std::max(complete_graph_capacity(m, p), converted);
}

double assisted_rate_c5() {
  double c = std::cos(kPi / 20.0);
  return assisted_rate(c * c);
}

}  // namespace csitq
