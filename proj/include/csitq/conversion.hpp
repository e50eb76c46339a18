#pragma once

#include <cstdint>
#include <vector>

#include "csitq/channels.hpp"

namespace csitq {

/// Angle maps of the conversion strategy: xi indexed by state, eta indexed
/// by output, all reduced to [0, 2*pi).
struct AngleScheme {
  std::vector<double> xi;
  std::vector<double> eta;
};

/// Reduces an angle to [0, 2*pi).
double reduce_angle(double theta);

/// Direction perpendicular to the angular midpoint of a and b, oriented
/// toward a: ((a+b+pi)/2 mod 2pi) when a > b, ((a+b-pi)/2 mod 2pi) when
/// a < b. Undefined (throws) for a == b.
double perp_bisector_angle(double a, double b);

/// The pentagon scheme for the cyclic 5-vertex channel in its y = x + s
/// (mod 5) labeling: xi = (pi/10)[0,8,16,4,12], eta = (pi/10)[1,9,17,5,13].
AngleScheme c5_angles();

/// Complete-graph scheme: eta_y = 2*pi*y/m uniform on the circle,
/// xi_s = perp_bisector_angle(eta_{s0}, eta_{s1}) per lexicographic edge.
AngleScheme complete_graph_angles(int m);

/// The cyclic 5-vertex graph channel with the oriented labeling
/// state s -> edge (s, s+1 mod 5), i.e. y = x + s (mod 5), uniform states.
ChannelWithState c5_channel();

/// Noiseless complete-graph channel with uniform states.
ChannelWithState km_channel(int m);

/// Effective binary symmetric channel produced by the conversion protocol.
/// Agreement probabilities are conditioned on the raw channel input X.
struct InducedBsc {
  double p_agree_given_x0 = 0.0;
  double p_agree_given_x1 = 0.0;
  double crossover = 0.0;  // 1 - average agreement

  double agree() const { return 0.5 * (p_agree_given_x0 + p_agree_given_x1); }
};

/// Closed-form agreement probabilities of the converted channel:
///   P(agree | X=0) = p * sum_s P_S(s) cos^2((eta_{s0} - xi_s)/2) + (1-p)/2
///   P(agree | X=1) = p * sum_s P_S(s) sin^2((eta_{s1} - xi_s)/2) + (1-p)/2
/// `ch` must be a deterministic graph channel; `p` is the noise parameter of
/// its noisy version.
InducedBsc induced_bsc_analytic(const ChannelWithState& ch, double p, const AngleScheme& ang);

/// Same quantity evaluated by running the full protocol through the quantum
/// simulator: transmitter phase gate and +/- measurement, classical
/// pre-processing X = X' xor U, channel branch (with the uniform-noise branch
/// at weight 1-p), receiver phase gate and +/- measurement. Exact branch
/// accumulation, no sampling; agrees with the closed form to 1e-10.
InducedBsc induced_bsc_quantum(const ChannelWithState& ch, double p, const AngleScheme& ang);

struct MonteCarloBsc {
  InducedBsc bsc;
  double stderr_given_x0 = 0.0;  // binomial standard errors
  double stderr_given_x1 = 0.0;
  uint64_t n_given_x0 = 0;
  uint64_t n_given_x1 = 0;
  uint64_t samples = 0;
  uint64_t seed = 0;
};

/// Sampled protocol run. Per sample the draw order is: X' (fair bit), state
/// s ~ P_S, U (fair bit), noise flag ~ Bernoulli(1-p), then the noisy output
/// (only when the flag fired), then the receiver bit, one uniform draw each.
MonteCarloBsc induced_bsc_montecarlo(const ChannelWithState& ch, double p, const AngleScheme& ang,
                                     uint64_t samples, uint64_t seed);

/// Rate achievable over a BSC with the given agreement probability,
/// 1 - H_b(agree).
double assisted_rate(double agree);

/// cot(pi/2m) / (2(m-1)): the bias of the complete-graph conversion, so that
/// the agreement probability is 1/2 + p * bias.
double complete_graph_bias(int m);

/// Agreement probability q_{m,p} = p*(1/2 + bias) + (1-p)/2 of the converted
/// noisy complete-graph channel; p = 1 gives r_m.
double complete_graph_agree(int m, double p);

/// max(closed-form classical capacity, 1 - H_b(q_{m,p})).
double assisted_rate_complete_graph(int m, double p);

/// 1 - H_b(cos^2(pi/20)), the rate of the pentagon scheme.
double assisted_rate_c5();

}  // namespace csitq
