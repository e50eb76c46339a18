#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "csitq/util.hpp"

namespace csitq {

/// Discrete memoryless channel with i.i.d. state: conditional kernel
/// N(y|x,s) together with a strictly positive state distribution P_S.
///
/// Alongside the floating kernel, every constructor records the exact
/// support of each (s,x) row and, for deterministic channels, the unique
/// output per (s,x). Zero-error logic consumes only these exact views and
/// never compares floats against 0 or 1.
struct ChannelWithState {
  int x_card = 0;
  int y_card = 0;
  int s_card = 0;
  std::vector<double> kernel;      // index (s * x_card + x) * y_card + y
  std::vector<double> state_dist;  // length s_card, strictly positive
  std::vector<Bitset> support;     // per (s * x_card + x): {y : N(y|x,s) > 0}
  std::vector<int> det_output;     // per (s,x) when deterministic, else empty
  std::map<std::string, std::string> metadata;

  double prob(int s, int x, int y) const { return kernel[(static_cast<size_t>(s) * x_card + x) * y_card + y]; }

  bool is_deterministic() const { return !det_output.empty(); }

  /// Unique output for (s,x); only valid on deterministic channels.
  int deterministic_output(int s, int x) const { return det_output[static_cast<size_t>(s) * x_card + x]; }

  const Bitset& support_of(int s, int x) const { return support[static_cast<size_t>(s) * x_card + x]; }

  /// Re-checks all type invariants; returns one message per violation,
  /// naming the offending (s,x) where applicable. Empty means valid.
  std::vector<std::string> validate() const;

  /// Builds a channel from raw data, deriving the exact views: support from
  /// nonzero kernel entries, deterministic table when every entry is exactly
  /// 0 or 1. Throws if any invariant fails.
  static ChannelWithState from_kernel(int x_card, int y_card, int s_card,
                                      std::vector<double> kernel,
                                      std::vector<double> state_dist,
                                      std::map<std::string, std::string> metadata = {});
};

/// Simple undirected graph with a fixed endpoint order per edge (s0 < s1)
/// and states indexed by lexicographic edge order.
struct GraphSpec {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // sorted, each with first < second

  GraphSpec() = default;
  /// Normalizes endpoint order, sorts lexicographically, rejects self-loops,
  /// duplicates, and out-of-range vertices.
  GraphSpec(int vertex_count, std::vector<std::pair<int, int>> raw_edges);
};

GraphSpec cycle_graph(int m);
GraphSpec complete_graph(int m);
// Extra shapes used by the zero-error test corpus.
GraphSpec path_graph(int m);
GraphSpec star_graph(int m);
GraphSpec petersen_graph();

/// Stateless channel N_o(y|x), the base object for input-constrained
/// channels. Rows must be distributions; support is exact.
struct StatelessKernel {
  int x_card = 0;
  int y_card = 0;
  std::vector<double> p;  // index x * y_card + y
  std::vector<Bitset> support;

  static StatelessKernel from_rows(int x_card, int y_card, std::vector<double> p);
};

/// Per-state allowed input sets with a reference symbol substituted for
/// disallowed inputs.
struct InputConstraintMap {
  std::vector<std::vector<int>> allowed;  // per state, non-empty
  std::vector<int> reference;             // per state, member of allowed[s]

  void validate(int x_card) const;
};

std::vector<double> uniform_dist(int n);

/// Graph channel over explicitly oriented edges: state s is the ordered pair
/// edges[s] = (e0, e1) and the binary input selects the endpoint,
/// N(y|x,s) = [y == e_x]. This is the general constructor; GraphSpec-based
/// construction and labelings such as the cyclic y = x + s (mod m) form are
/// special cases of the orientation.
ChannelWithState endpoint_channel(int vertex_count,
                                  const std::vector<std::pair<int, int>>& oriented_edges,
                                  std::vector<double> state_dist);

/// Graph channel of a normalized GraphSpec (endpoint order s0 < s1).
ChannelWithState graph_channel(const GraphSpec& g, std::vector<double> state_dist);

/// Mixes the channel with uniform output noise:
/// N_p(y|x,s) = p * N(y|x,s) + (1-p)/|Y|.
ChannelWithState noisy_version(const ChannelWithState& ch, double p);

/// Channel with state built from input constraints on a stateless base:
/// N(y|x,s) = N_o(y|x) when x is allowed under s, else N_o(y|x_s) for the
/// state's reference symbol x_s.
ChannelWithState constrained_channel(const StatelessKernel& base,
                                     const InputConstraintMap& constraints,
                                     std::vector<double> state_dist);

}  // namespace csitq
