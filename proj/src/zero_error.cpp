#include "csitq/zero_error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "csitq/quantum.hpp"

namespace csitq {

namespace {

int64_t dot(const std::vector<int64_t>& u, const std::vector<int64_t>& v) {
  int64_t acc = 0;
  for (size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

}  // namespace

BipartiteCheck is_bipartite(const GraphSpec& g) {
  std::vector<std::vector<int>> adjacency(g.vertex_count);
  for (auto [a, b] : g.edges) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  BipartiteCheck result;
  std::vector<int> color(g.vertex_count, -1);
  std::vector<int> parent(g.vertex_count, -1);
  std::vector<int> depth(g.vertex_count, 0);
  for (int root = 0; root < g.vertex_count; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::vector<int> queue = {root};
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v : adjacency[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          // Odd cycle: walk both endpoints up to their lowest common
          // ancestor; equal colors make the total length odd.
          std::vector<int> up_u = {u}, up_v = {v};
          int a = u, b = v;
          while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
          while (depth[b] > depth[a]) up_v.push_back(b = parent[b]);
          while (a != b) {
            up_u.push_back(a = parent[a]);
            up_v.push_back(b = parent[b]);
          }
          result.bipartite = false;
          result.odd_cycle = up_u;
          for (int i = static_cast<int>(up_v.size()) - 2; i >= 0; --i) {
            result.odd_cycle.push_back(up_v[i]);
          }
          return result;
        }
      }
    }
  }
  result.bipartite = true;
  result.coloring = std::move(color);
  return result;
}

namespace {

struct Candidate {
  Bitset support;
  int representative = 0;
};

/// Distinct kernel-row supports per state; inputs with identical supports are
/// interchangeable for zero-error purposes, so one representative suffices.
std::vector<std::vector<Candidate>> candidates_per_state(const ChannelWithState& ch) {
  std::vector<std::vector<Candidate>> out(ch.s_card);
  for (int s = 0; s < ch.s_card; ++s) {
    for (int x = 0; x < ch.x_card; ++x) {
      const Bitset& supp = ch.support_of(s, x);
      bool seen = false;
      for (const Candidate& c : out[s]) {
        if (c.support == supp) {
          seen = true;
          break;
        }
      }
      if (!seen) out[s].push_back(Candidate{supp, x});
    }
  }
  return out;
}

struct OneshotSearch {
  const std::vector<std::vector<Candidate>>& cand;
  int s_card;
  int M;
  uint64_t budget;
  uint64_t nodes = 0;
  std::vector<Bitset> reach;          // per message
  std::vector<std::vector<int>> pick; // candidate index per (message, state)

  OneshotSearch(const std::vector<std::vector<Candidate>>& cand_, int s_card_, int M_,
                int y_card, uint64_t budget_)
      : cand(cand_), s_card(s_card_), M(M_), budget(budget_),
        reach(M_, Bitset(y_card)), pick(M_, std::vector<int>(s_card_, -1)) {}

  bool extend(int s, int w) {
    if (s == s_card) return true;
    int next_s = w + 1 == M ? s + 1 : s;
    int next_w = w + 1 == M ? 0 : w + 1;
    for (int c = 0; c < static_cast<int>(cand[s].size()); ++c) {
      // Messages are interchangeable; force increasing picks at the first
      // state to cut the M! relabelings.
      if (s == 0 && w > 0 && c <= pick[w - 1][0]) continue;
      if (++nodes > budget) throw std::runtime_error("zero-error search: node budget exceeded");
      const Bitset& supp = cand[s][c].support;
      bool conflict = false;
      for (int other = 0; other < M; ++other) {
        if (other != w && supp.intersects(reach[other])) {
          conflict = true;
          break;
        }
      }
      if (conflict) continue;
      Bitset saved = reach[w];
      reach[w].merge(supp);
      pick[w][s] = c;
      if (extend(next_s, next_w)) return true;
      reach[w] = std::move(saved);
      pick[w][s] = -1;
    }
    return false;
  }
};

}  // namespace

ZeroErrorVerdict classical_zero_error_oneshot(const ChannelWithState& ch, int M,
                                              uint64_t node_budget) {
  if (M < 1) throw std::invalid_argument("classical_zero_error_oneshot: M must be >= 1");
  ZeroErrorVerdict verdict;
  if (M == 1) {
    // A single message always decodes.
    verdict.feasible = true;
    Encoders enc;
    enc.n = 1;
    enc.first_use.assign(1, std::vector<int>(ch.s_card, 0));
    verdict.witness = std::move(enc);
    return verdict;
  }
  auto cand = candidates_per_state(ch);
  OneshotSearch search(cand, ch.s_card, M, ch.y_card, node_budget);
  verdict.feasible = search.extend(0, 0);
  verdict.nodes_explored = search.nodes;
  if (verdict.feasible) {
    Encoders enc;
    enc.n = 1;
    enc.first_use.assign(M, std::vector<int>(ch.s_card, 0));
    for (int w = 0; w < M; ++w) {
      for (int s = 0; s < ch.s_card; ++s) {
        enc.first_use[w][s] = cand[s][search.pick[w][s]].representative;
      }
    }
    if (!replay_zero_error(ch, enc)) {
      throw std::logic_error("classical_zero_error_oneshot: witness failed replay");
    }
    verdict.witness = std::move(enc);
  }
  return verdict;
}

namespace {

/// Reachable (y1, y2) pairs of a single-message two-use encoder, encoded as
/// a bitset over y1 * y_card + y2.
Bitset n2_reachable(const ChannelWithState& ch, const std::vector<int>& phi1,
                    const std::vector<int>& phi2) {
  Bitset reach(ch.y_card * ch.y_card);
  for (int s1 = 0; s1 < ch.s_card; ++s1) {
    const Bitset& supp1 = ch.support_of(s1, phi1[s1]);
    for (int s2 = 0; s2 < ch.s_card; ++s2) {
      const Bitset& supp2 = ch.support_of(s2, phi2[static_cast<size_t>(s1) * ch.s_card + s2]);
      for (int y1 = 0; y1 < ch.y_card; ++y1) {
        if (!supp1.test(y1)) continue;
        for (int y2 = 0; y2 < ch.y_card; ++y2) {
          if (supp2.test(y2)) reach.set(y1 * ch.y_card + y2);
        }
      }
    }
  }
  return reach;
}

/// Largest M' <= cap with a feasible one-shot code.
int oneshot_maximum(const ChannelWithState& ch, int cap, uint64_t node_budget,
                    std::vector<Encoders>* witnesses) {
  int best = 1;
  Encoders best_enc;
  best_enc.n = 1;
  best_enc.first_use.assign(1, std::vector<int>(ch.s_card, 0));
  for (int m = 2; m <= cap; ++m) {
    auto verdict = classical_zero_error_oneshot(ch, m, node_budget);
    if (!verdict.feasible) break;
    best = m;
    best_enc = *verdict.witness;
  }
  if (witnesses) {
    witnesses->clear();
    witnesses->push_back(best_enc);
  }
  return best;
}

}  // namespace

ZeroErrorVerdict classical_zero_error_n2(const ChannelWithState& ch, int M,
                                         uint64_t node_budget) {
  if (M < 1) throw std::invalid_argument("classical_zero_error_n2: M must be >= 1");
  ZeroErrorVerdict verdict;
  const int S = ch.s_card;
  const int Y = ch.y_card;

  if (M == 1) {
    verdict.feasible = true;
    Encoders enc;
    enc.n = 2;
    enc.first_use.assign(1, std::vector<int>(S, 0));
    enc.second_use.assign(1, std::vector<int>(static_cast<size_t>(S) * S, 0));
    verdict.witness = std::move(enc);
    return verdict;
  }

  // Feasibility-first: M1^2 messages are always reachable in two uses by
  // concatenating one-shot witnesses, and the lift stays causal.
  std::vector<Encoders> oneshot_witness;
  int cap = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(M))));
  int m1 = oneshot_maximum(ch, std::max(2, std::min(M, cap * cap)), node_budget, &oneshot_witness);
  verdict.nodes_explored = 0;
  if (static_cast<long long>(m1) * m1 >= M) {
    const auto& e1 = oneshot_witness.front().first_use;
    Encoders enc;
    enc.n = 2;
    enc.first_use.assign(M, std::vector<int>(S, 0));
    enc.second_use.assign(M, std::vector<int>(static_cast<size_t>(S) * S, 0));
    for (int w = 0; w < M; ++w) {
      int a = w / m1, b = w % m1;
      for (int s1 = 0; s1 < S; ++s1) {
        enc.first_use[w][s1] = e1[a][s1];
        for (int s2 = 0; s2 < S; ++s2) {
          enc.second_use[w][static_cast<size_t>(s1) * S + s2] = e1[b][s2];
        }
      }
    }
    if (!replay_zero_error(ch, enc)) {
      throw std::logic_error("classical_zero_error_n2: lifted witness failed replay");
    }
    verdict.feasible = true;
    verdict.witness = std::move(enc);
    return verdict;
  }

  // Exhaustive scan over causal encoder pairs, guarded by the enumeration
  // bound (log-domain to avoid overflow): |X|^(M*S) * |X|^(M*S^2) / M! <= 2^28.
  double log_space = M * (S + static_cast<double>(S) * S) * std::log2(static_cast<double>(ch.x_card));
  for (int k = 2; k <= M; ++k) log_space -= std::log2(static_cast<double>(k));
  if (log_space > 28.0) {
    throw std::invalid_argument("classical_zero_error_n2: enumeration bound 2^28 exceeded");
  }

  int64_t per_message = 1;
  for (int i = 0; i < S + S * S; ++i) per_message *= ch.x_card;
  std::vector<Bitset> reach(per_message, Bitset(Y * Y));
  std::vector<int> phi1(S), phi2(static_cast<size_t>(S) * S);
  for (int64_t e = 0; e < per_message; ++e) {
    int64_t digits = e;
    for (int s = 0; s < S; ++s) {
      phi1[s] = static_cast<int>(digits % ch.x_card);
      digits /= ch.x_card;
    }
    for (int i = 0; i < S * S; ++i) {
      phi2[i] = static_cast<int>(digits % ch.x_card);
      digits /= ch.x_card;
    }
    reach[e] = n2_reachable(ch, phi1, phi2);
  }

  // Backtracking over messages with strictly increasing encoder indices.
  std::vector<int64_t> chosen;
  uint64_t nodes = 0;
  Bitset merged(Y * Y);
  std::vector<Bitset> merged_stack;
  std::function<bool(int, int64_t)> assign = [&](int w, int64_t from) -> bool {
    if (w == M) return true;
    for (int64_t e = from; e < per_message; ++e) {
      if (++nodes > node_budget) {
        throw std::runtime_error("classical_zero_error_n2: node budget exceeded");
      }
      if (reach[e].intersects(merged)) continue;
      merged_stack.push_back(merged);
      merged.merge(reach[e]);
      chosen.push_back(e);
      if (assign(w + 1, e + 1)) return true;
      chosen.pop_back();
      merged = std::move(merged_stack.back());
      merged_stack.pop_back();
    }
    return false;
  };
  verdict.feasible = assign(0, 0);
  verdict.nodes_explored = nodes;
  if (verdict.feasible) {
    Encoders enc;
    enc.n = 2;
    enc.first_use.assign(M, std::vector<int>(S, 0));
    enc.second_use.assign(M, std::vector<int>(static_cast<size_t>(S) * S, 0));
    for (int w = 0; w < M; ++w) {
      int64_t digits = chosen[w];
      for (int s = 0; s < S; ++s) {
        enc.first_use[w][s] = static_cast<int>(digits % ch.x_card);
        digits /= ch.x_card;
      }
      for (int i = 0; i < S * S; ++i) {
        enc.second_use[w][i] = static_cast<int>(digits % ch.x_card);
        digits /= ch.x_card;
      }
    }
    if (!replay_zero_error(ch, enc)) {
      throw std::logic_error("classical_zero_error_n2: witness failed replay");
    }
    verdict.witness = std::move(enc);
  }
  return verdict;
}

bool replay_zero_error(const ChannelWithState& ch, const Encoders& encoders) {
  const int M = static_cast<int>(encoders.first_use.size());
  const int S = ch.s_card;
  const int Y = ch.y_card;
  for (const auto& row : encoders.first_use) {
    if (static_cast<int>(row.size()) != S) return false;
    for (int x : row) {
      if (x < 0 || x >= ch.x_card) return false;
    }
  }
  if (encoders.n == 1) {
    // owner[y] = first message that can produce output y.
    std::vector<int> owner(Y, -1);
    for (int w = 0; w < M; ++w) {
      for (int s = 0; s < S; ++s) {
        for (int y = 0; y < Y; ++y) {
          if (ch.prob(s, encoders.first_use[w][s], y) <= 0.0) continue;
          if (owner[y] != -1 && owner[y] != w) return false;
          owner[y] = w;
        }
      }
    }
    return true;
  }
  if (encoders.n != 2 || static_cast<int>(encoders.second_use.size()) != M) return false;
  std::vector<int> owner(static_cast<size_t>(Y) * Y, -1);
  for (int w = 0; w < M; ++w) {
    if (static_cast<int>(encoders.second_use[w].size()) != S * S) return false;
    for (int s1 = 0; s1 < S; ++s1) {
      int x1 = encoders.first_use[w][s1];
      for (int s2 = 0; s2 < S; ++s2) {
        int x2 = encoders.second_use[w][static_cast<size_t>(s1) * S + s2];
        if (x2 < 0 || x2 >= ch.x_card) return false;
        for (int y1 = 0; y1 < Y; ++y1) {
          if (ch.prob(s1, x1, y1) <= 0.0) continue;
          for (int y2 = 0; y2 < Y; ++y2) {
            if (ch.prob(s2, x2, y2) <= 0.0) continue;
            size_t key = static_cast<size_t>(y1) * Y + y2;
            if (owner[key] != -1 && owner[key] != w) return false;
            owner[key] = w;
          }
        }
      }
    }
  }
  return true;
}

void BksSet::validate() const {
  if (dim < 2) throw std::invalid_argument("BksSet: dim must be >= 2");
  if (a_bases.empty() || b_bases.empty()) throw std::invalid_argument("BksSet: missing bases");
  auto check_side = [this](const std::vector<std::vector<std::vector<int64_t>>>& side) {
    for (const auto& basis : side) {
      if (static_cast<int>(basis.size()) != dim) {
        throw std::invalid_argument("BksSet: basis is not complete");
      }
      for (const auto& vec : basis) {
        if (static_cast<int>(vec.size()) != dim) {
          throw std::invalid_argument("BksSet: vector has wrong dimension");
        }
        if (dot(vec, vec) == 0) throw std::invalid_argument("BksSet: zero vector");
      }
      for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
          if (dot(basis[i], basis[j]) != 0) {
            throw std::invalid_argument("BksSet: basis is not orthogonal");
          }
        }
      }
    }
  };
  check_side(a_bases);
  check_side(b_bases);
}

BksSet magic_square_bks() {
  BksSet set;
  set.dim = 4;
  set.a_bases = {
      {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
      {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}},
      {{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}},
  };
  set.b_bases = {
      {{1, 1, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, -1}},
      {{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, -1, 0}, {0, 1, 0, -1}},
      {{1, 0, 0, 1}, {1, 0, 0, -1}, {0, 1, 1, 0}, {0, 1, -1, 0}},
  };
  set.validate();
  return set;
}

BksCheck verify_bks(const BksSet& set) {
  set.validate();
  const int a = set.a_count();
  const int b = set.b_count();
  const int d = set.dim;
  double log_space = (a + b) * std::log2(static_cast<double>(d));
  if (log_space > 24.0) throw std::invalid_argument("verify_bks: d^(a+b) exceeds 2^24");

  // Orthogonality table between every A-side and B-side vector.
  std::vector<char> orth(static_cast<size_t>(a) * d * b * d);
  for (int i = 0; i < a; ++i) {
    for (int k = 0; k < d; ++k) {
      for (int j = 0; j < b; ++j) {
        for (int l = 0; l < d; ++l) {
          orth[((static_cast<size_t>(i) * d + k) * b + j) * d + l] =
              dot(set.a_bases[i][k], set.b_bases[j][l]) == 0;
        }
      }
    }
  }

  std::vector<int> selection(a + b, 0);
  while (true) {
    bool covered = false;
    for (int i = 0; i < a && !covered; ++i) {
      for (int j = 0; j < b && !covered; ++j) {
        if (orth[((static_cast<size_t>(i) * d + selection[i]) * b + j) * d + selection[a + j]]) {
          covered = true;
        }
      }
    }
    if (!covered) return BksCheck{false, selection};
    int pos = a + b - 1;
    while (pos >= 0 && ++selection[pos] == d) selection[pos--] = 0;
    if (pos < 0) break;
  }
  return BksCheck{true, {}};
}

BksChannel bks_channel(const BksSet& set, IncidentWeights output_rule,
                       std::vector<double> state_dist) {
  auto check = verify_bks(set);
  if (!check.holds) {
    throw std::invalid_argument("bks_channel: set lacks the covering property");
  }
  BksChannel bks;
  bks.set = set;
  const int d = set.dim;
  const int a = set.a_count();
  const int b = set.b_count();

  std::vector<const std::vector<int64_t>*> vectors;
  for (int i = 0; i < a; ++i) {
    for (int k = 0; k < d; ++k) {
      bks.input_codec.push_back({1, i, k});
      vectors.push_back(&set.a_bases[i][k]);
    }
  }
  for (int j = 0; j < b; ++j) {
    for (int k = 0; k < d; ++k) {
      bks.input_codec.push_back({2, j, k});
      vectors.push_back(&set.b_bases[j][k]);
    }
  }
  const int x_card = static_cast<int>(vectors.size());

  for (int x = 0; x < x_card; ++x) {
    for (int xp = x + 1; xp < x_card; ++xp) {
      if (dot(*vectors[x], *vectors[xp]) == 0) bks.output_pairs.emplace_back(x, xp);
    }
  }
  const int y_card = static_cast<int>(bks.output_pairs.size());

  std::vector<std::vector<int>> incident(x_card);
  for (int y = 0; y < y_card; ++y) {
    incident[bks.output_pairs[y].first].push_back(y);
    incident[bks.output_pairs[y].second].push_back(y);
  }

  std::vector<double> base(static_cast<size_t>(x_card) * y_card, 0.0);
  for (int x = 0; x < x_card; ++x) {
    if (incident[x].empty()) throw std::invalid_argument("bks_channel: isolated input vector");
    std::vector<double> weights;
    if (output_rule) {
      weights = output_rule(x, incident[x]);
      if (weights.size() != incident[x].size()) {
        throw std::invalid_argument("bks_channel: output rule returned wrong arity");
      }
      for (double w : weights) {
        if (!(w > 0.0)) {
          throw std::invalid_argument("bks_channel: output rule must put positive mass on every incident pair");
        }
      }
    } else {
      weights.assign(incident[x].size(), 1.0 / incident[x].size());
    }
    for (size_t e = 0; e < incident[x].size(); ++e) {
      base[static_cast<size_t>(x) * y_card + incident[x][e]] = weights[e];
    }
  }
  StatelessKernel kernel = StatelessKernel::from_rows(x_card, y_card, std::move(base));

  bks.constraints.allowed.resize(static_cast<size_t>(a) * b);
  bks.constraints.reference.resize(static_cast<size_t>(a) * b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      auto& allowed = bks.constraints.allowed[static_cast<size_t>(i) * b + j];
      for (int k = 0; k < d; ++k) allowed.push_back(bks.input_index(1, i, k));
      for (int k = 0; k < d; ++k) allowed.push_back(bks.input_index(2, j, k));
      bks.constraints.reference[static_cast<size_t>(i) * b + j] = allowed.front();
    }
  }

  bool uniform_states = state_dist.empty();
  if (uniform_states) state_dist = uniform_dist(a * b);
  bks.channel = constrained_channel(kernel, bks.constraints, std::move(state_dist));
  bks.channel.metadata["name"] = "bks";
  bks.channel.metadata["output_rule"] = output_rule ? "custom" : "uniform-incident";
  bks.channel.metadata["state_dist"] = uniform_states ? "uniform" : "custom";
  return bks;
}

ProtocolReport entangled_zero_error_protocol(const BksChannel& bks) {
  const BksSet& set = bks.set;
  const int d = set.dim;
  const int a = set.a_count();
  const int b = set.b_count();

  // Normalized complex copies of the integer vectors.
  auto normalized = [&](int x) {
    const auto& codec = bks.input_codec[x];
    const auto& vec = codec[0] == 1 ? set.a_bases[codec[1]][codec[2]] : set.b_bases[codec[1]][codec[2]];
    std::vector<cdouble> out(vec.begin(), vec.end());
    double nrm = norm(out);
    for (cdouble& c : out) c /= nrm;
    return out;
  };

  ProtocolReport report;
  report.min_conditional_success = 1.0;
  const double case_weight = 1.0 / (2.0 * a * b);

  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      const int state = bks.state_index(i, j);
      for (int message = 1; message <= 2; ++message) {
        ProtocolCase pc;
        pc.state_i = i;
        pc.state_j = j;
        pc.message = message;

        // Transmitter measures its half of the shared state in A_i or B_j.
        ComplexMatrix basis(d, d);
        for (int k = 0; k < d; ++k) {
          int x = message == 1 ? bks.input_index(1, i, k) : bks.input_index(2, j, k);
          auto col = normalized(x);
          for (int r = 0; r < d; ++r) basis.at(r, k) = col[r];
        }
        PureState shared = max_entangled(d);
        auto tx_branches = measure_in_basis(shared, basis, 0);

        for (int k = 0; k < d; ++k) {
          if (!tx_branches[k].post) continue;
          const double p_k = tx_branches[k].probability;
          const int x = message == 1 ? bks.input_index(1, i, k) : bks.input_index(2, j, k);
          const PureState& post = *tx_branches[k].post;

          // Ricochet: the receiver's marginal collapses to the conjugate of
          // the measured basis vector.
          auto phi_conj = normalized(x);
          for (cdouble& c : phi_conj) c = std::conj(c);
          DensityOperator rx_marginal = partial_trace(to_density(post), {1});
          if (rx_marginal.mat.max_abs_diff(ComplexMatrix::outer(phi_conj, phi_conj)) > 1e-10) {
            report.receiver_state_matches = false;
          }

          for (int y = 0; y < bks.channel.y_card; ++y) {
            double p_y = bks.channel.prob(state, x, y);
            if (p_y <= 0.0) continue;
            auto [first, second] = bks.output_pairs[y];
            int other = first == x ? second : first;

            auto phi_other_conj = normalized(other);
            for (cdouble& c : phi_other_conj) c = std::conj(c);
            ComplexMatrix p1 = ComplexMatrix::outer(phi_conj, phi_conj);
            ComplexMatrix p2 = ComplexMatrix::outer(phi_other_conj, phi_other_conj);
            ComplexMatrix p3 = ComplexMatrix::identity(d) - p1 - p2;
            auto rx_branches = measure_projectors(post, {p1, p2, p3}, 1);

            for (int outcome = 0; outcome < 3; ++outcome) {
              double p_branch = p_k * p_y * rx_branches[outcome].probability;
              if (p_branch == 0.0 && outcome == 2) continue;
              ProtocolBranch branch;
              branch.state_i = i;
              branch.state_j = j;
              branch.message = message;
              branch.outcome_k = k;
              branch.input = x;
              branch.output = y;
              branch.pvm_outcome = outcome;
              branch.probability = p_branch;
              int identified = outcome == 0 ? x : (outcome == 1 ? other : -1);
              branch.decoded = identified < 0 ? 0 : bks.input_codec[identified][0];
              report.branches.push_back(branch);

              pc.total_probability += p_branch;
              if (branch.decoded == message) pc.success_mass += p_branch;
              if (outcome == 2) pc.third_outcome_mass += p_branch;
            }
          }
        }
        report.cases.push_back(pc);
        report.success_probability += case_weight * pc.success_mass;
        report.third_outcome_mass += case_weight * pc.third_outcome_mass;
        report.min_conditional_success = std::min(report.min_conditional_success, pc.success_mass);
      }
    }
  }
  return report;
}

TwoCliqueCertificate two_clique_certificate(const BksChannel& bks, int state_i, int state_j) {
  const BksSet& set = bks.set;
  if (state_i < 0 || state_i >= set.a_count() || state_j < 0 || state_j >= set.b_count()) {
    throw std::invalid_argument("two_clique_certificate: state out of range");
  }
  auto is_clique = [&](const std::vector<std::vector<int64_t>>& basis) {
    for (size_t u = 0; u < basis.size(); ++u) {
      for (size_t v = u + 1; v < basis.size(); ++v) {
        if (dot(basis[u], basis[v]) != 0) return false;
      }
    }
    return true;
  };
  TwoCliqueCertificate cert;
  bool a_ok = is_clique(set.a_bases[state_i]);
  bool b_ok = is_clique(set.b_bases[state_j]);
  cert.a_clique_size = a_ok ? set.dim : 0;
  cert.b_clique_size = b_ok ? set.dim : 0;
  cert.holds = a_ok && b_ok;
  return cert;
}

}  // namespace csitq
