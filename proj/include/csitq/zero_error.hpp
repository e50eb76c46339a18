#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "csitq/channels.hpp"

namespace csitq {

struct BipartiteCheck {
  bool bipartite = false;
  std::vector<int> coloring;   // valid 2-coloring when bipartite
  std::vector<int> odd_cycle;  // vertex sequence of an odd cycle otherwise
};

/// BFS 2-coloring. Returns either a valid bipartition or an odd-cycle
/// witness.
BipartiteCheck is_bipartite(const GraphSpec& g);

/// Deterministic causal encoders for a block of n channel uses.
/// first_use[w][s1] is the symbol for message w when the first state is s1;
/// for n = 2, second_use[w][s1 * s_card + s2] is the second symbol.
struct Encoders {
  int n = 1;
  std::vector<std::vector<int>> first_use;
  std::vector<std::vector<int>> second_use;
};

struct ZeroErrorVerdict {
  bool feasible = false;
  std::optional<Encoders> witness;
  uint64_t nodes_explored = 0;
};

/// Exhaustive feasibility of an (M, n=1) zero-error code: encoders
/// e_w : S -> X whose reachable output sets are pairwise disjoint across
/// messages. Backtracks over states in order, all messages per state,
/// candidate inputs deduplicated by exact row support. All set logic is
/// integer/bitset arithmetic.
ZeroErrorVerdict classical_zero_error_oneshot(const ChannelWithState& ch, int M,
                                              uint64_t node_budget = 200'000'000);

/// Feasibility of an (M, n=2) zero-error code with causal encoders.
/// Tries the product lift of one-shot witnesses first (M <= M1^2); otherwise
/// runs the exhaustive pair scan, guarded by the 2^28 enumeration bound.
ZeroErrorVerdict classical_zero_error_n2(const ChannelWithState& ch, int M,
                                         uint64_t node_budget = 400'000'000);

/// Independent replay of a witness: enumerates every (message, state
/// sequence, output sequence) branch from the kernel support and checks that
/// no output sequence is reachable from two messages.
bool replay_zero_error(const ChannelWithState& ch, const Encoders& encoders);

/// Families of complete orthogonal bases of C^d over integer coordinates
/// with the covering property: every cross selection of one vector per basis
/// contains an orthogonal (A-side, B-side) pair.
struct BksSet {
  int dim = 0;
  std::vector<std::vector<std::vector<int64_t>>> a_bases;
  std::vector<std::vector<std::vector<int64_t>>> b_bases;

  int a_count() const { return static_cast<int>(a_bases.size()); }
  int b_count() const { return static_cast<int>(b_bases.size()); }

  /// Checks shapes, nonzero vectors, and exact within-basis orthogonality
  /// (the covering property itself is verify_bks's job).
  void validate() const;
};

/// The 24-vector set in dimension 4 derived from the magic square game.
BksSet magic_square_bks();

struct BksCheck {
  bool holds = false;
  /// When the property fails: one violating selection, vector index per
  /// basis, A bases then B bases.
  std::vector<int> counterexample;
};

/// Exhaustive check of the covering property over all d^(a+b) selections.
BksCheck verify_bks(const BksSet& set);

/// Channel with state built from a B-KS set. Inputs are tagged basis
/// vectors; outputs are unordered orthogonal pairs of inputs; the state
/// (i,j) restricts the transmitter to the 2d inputs of A_i and B_j.
struct BksChannel {
  ChannelWithState channel;
  InputConstraintMap constraints;
  BksSet set;
  std::vector<std::array<int, 3>> input_codec;     // index -> (side 1|2, basis, k)
  std::vector<std::pair<int, int>> output_pairs;   // index -> {x, x'}

  int state_index(int i, int j) const { return i * set.b_count() + j; }
  int input_index(int side, int basis, int k) const {
    return side == 1 ? basis * set.dim + k : set.a_count() * set.dim + basis * set.dim + k;
  }
};

/// Weights over the orthogonal pairs incident to input x; defaults to
/// uniform when empty.
using IncidentWeights = std::function<std::vector<double>(int x, const std::vector<int>& incident)>;

/// Builds the channel. verify_bks must hold. The default output rule is
/// uniform over incident pairs and the default state distribution uniform
/// over [a] x [b]; both choices are recorded in the channel metadata.
BksChannel bks_channel(const BksSet& set, IncidentWeights output_rule = {},
                       std::vector<double> state_dist = {});

struct ProtocolBranch {
  int state_i = 0;
  int state_j = 0;
  int message = 0;      // 1 or 2
  int outcome_k = 0;    // transmitter basis outcome
  int input = 0;        // channel input index
  int output = 0;       // channel output index
  int pvm_outcome = 0;  // 0: first pair member, 1: second, 2: remainder
  double probability = 0.0;
  int decoded = 0;      // 0 when undecodable
};

/// Per (state, message) totals; branch probabilities are conditional on the
/// case, so total_probability should be 1 and success_mass the zero-error
/// figure of merit.
struct ProtocolCase {
  int state_i = 0;
  int state_j = 0;
  int message = 0;
  double total_probability = 0.0;
  double success_mass = 0.0;
  double third_outcome_mass = 0.0;
};

struct ProtocolReport {
  std::vector<ProtocolBranch> branches;
  std::vector<ProtocolCase> cases;
  double success_probability = 0.0;      // state- and message-averaged success
  double min_conditional_success = 0.0;  // worst (state, message) case
  double third_outcome_mass = 0.0;       // averaged mass of the remainder projector
  bool receiver_state_matches = true;    // ricochet check on every branch
};

/// Exact simulation of the one-use entangled scheme on a B-KS channel: the
/// transmitter measures its half of a maximally entangled state in A_i
/// (message 1) or B_j (message 2), sends the collapsed input, and the
/// receiver distinguishes the two candidates of the observed output pair
/// with a three-element PVM. Enumerates every branch per (state, message).
ProtocolReport entangled_zero_error_protocol(const BksChannel& bks);

struct TwoCliqueCertificate {
  bool holds = false;
  int a_clique_size = 0;
  int b_clique_size = 0;
};

/// Verifies that under state (i,j) the confusability graph on the allowed
/// inputs splits into the two size-d cliques A_i and B_j (adjacency = exact
/// integer orthogonality), which bounds the assisted zero-error capacity of
/// the state-constrained channel by one bit.
TwoCliqueCertificate two_clique_certificate(const BksChannel& bks, int state_i, int state_j);

}  // namespace csitq
