#pragma once

#include <cstdint>
#include <vector>

#include "csitq/channels.hpp"

namespace csitq {

/// Stateless channel over Shannon strategies t : S -> X, with
/// W(y|t) = sum_s P_S(s) N(y | t(s), s). The causal-CSIT capacity of the
/// original channel equals the plain capacity of this one.
struct StrategyChannel {
  int strategy_count = 0;
  int y_card = 0;
  int x_card = 0;  // codec parameters of the underlying channel
  int s_card = 0;
  std::vector<double> w;  // index t * y_card + y

  double prob(int t, int y) const { return w[static_cast<size_t>(t) * y_card + y]; }

  /// Codec: strategy index t encodes the map digit-wise in base x_card,
  /// least significant digit = state 0.
  std::vector<int> strategy_map(int t) const;
  int strategy_index(const std::vector<int>& map) const;
};

StrategyChannel shannon_strategy_channel(const ChannelWithState& ch);

struct CapacityReport {
  double capacity_bits = 0.0;           // certified achievable value (lower bound)
  std::vector<double> input_dist;       // attains capacity_bits
  int iterations = 0;
  double gap_bound = 0.0;               // capacity <= capacity_bits + gap_bound
  bool converged = false;
};

/// Blahut-Arimoto with the standard per-iteration bounds
/// I(p) <= C <= max_t D(W(.|t) || q). Stops when their difference drops to
/// tol; otherwise reports the best bounds after max_iter.
CapacityReport blahut_arimoto(const StrategyChannel& w, double tol = 1e-9,
                              int max_iter = 100000,
                              std::vector<double>* lower_bound_trace = nullptr);

/// Closed-form causal-CSIT capacity of the noisy complete-graph channel:
/// (1/m) sum_k (1 + p c_{m,k}) log2(1 + p c_{m,k}), c_{m,k} = (m-2k+1)/(m-1).
double complete_graph_capacity(int m, double p);

struct MinOutputEntropyResult {
  double value = 0.0;              // min over endpoint maps of H(p v + (1-p)/m)
  std::vector<uint8_t> choice;     // argmin endpoint selection per state (edge)
  std::vector<double> v;           // noiseless output distribution of the argmin
  uint64_t enumerated = 0;
};

/// Exhaustive minimization of the per-strategy output entropy of the noisy
/// complete-graph channel over all 2^(m(m-1)/2) endpoint maps. Ties broken by
/// the smallest binary encoding (bit s = choice for edge s in lexicographic
/// order). Enumeration may be partitioned across workers; the reduction is
/// deterministic.
MinOutputEntropyResult min_output_entropy_bruteforce(int m, double p, int workers = 0);

}  // namespace csitq
