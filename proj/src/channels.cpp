#include "csitq/channels.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace csitq {

namespace {

constexpr double kRowSumTol = 1e-12;
constexpr double kMinStateProb = 1e-15;

void check_state_dist(const std::vector<double>& dist) {
  if (dist.empty()) throw std::invalid_argument("state_dist: empty");
  double sum = 0.0;
  for (double q : dist) {
    if (!(q >= kMinStateProb)) {
      throw std::invalid_argument("state_dist: entries must be strictly positive (>= 1e-15)");
    }
    if (q > 1.0) throw std::invalid_argument("state_dist: entry above 1");
    sum += q;
  }
  if (std::abs(sum - 1.0) > kRowSumTol) {
    throw std::invalid_argument("state_dist: does not sum to 1");
  }
}

}  // namespace

std::vector<std::string> ChannelWithState::validate() const {
  std::vector<std::string> errors;
  if (x_card <= 0 || y_card <= 0 || s_card <= 0) {
    errors.push_back("cardinalities must be positive");
    return errors;
  }
  if (kernel.size() != static_cast<size_t>(x_card) * y_card * s_card) {
    errors.push_back("kernel size mismatch");
    return errors;
  }
  if (state_dist.size() != static_cast<size_t>(s_card)) {
    errors.push_back("state_dist size mismatch");
    return errors;
  }
  for (int s = 0; s < s_card; ++s) {
    for (int x = 0; x < x_card; ++x) {
      double sum = 0.0;
      bool range_ok = true;
      for (int y = 0; y < y_card; ++y) {
        double q = prob(s, x, y);
        if (q < 0.0 || q > 1.0) range_ok = false;
        sum += q;
      }
      if (!range_ok) {
        errors.push_back("kernel entry outside [0,1] at (s=" + std::to_string(s) +
                         ", x=" + std::to_string(x) + ")");
      }
      if (std::abs(sum - 1.0) > kRowSumTol) {
        errors.push_back("kernel row sums to " + std::to_string(sum) + " at (s=" +
                         std::to_string(s) + ", x=" + std::to_string(x) + ")");
      }
    }
  }
  double ssum = 0.0;
  for (int s = 0; s < s_card; ++s) {
    double q = state_dist[s];
    if (!(q >= kMinStateProb)) {
      errors.push_back("state_dist not strictly positive at s=" + std::to_string(s));
    }
    ssum += q;
  }
  if (std::abs(ssum - 1.0) > kRowSumTol) {
    errors.push_back("state_dist sums to " + std::to_string(ssum));
  }
  return errors;
}

ChannelWithState ChannelWithState::from_kernel(int x_card, int y_card, int s_card,
                                               std::vector<double> kernel,
                                               std::vector<double> state_dist,
                                               std::map<std::string, std::string> metadata) {
  ChannelWithState ch;
  ch.x_card = x_card;
  ch.y_card = y_card;
  ch.s_card = s_card;
  ch.kernel = std::move(kernel);
  ch.state_dist = std::move(state_dist);
  ch.metadata = std::move(metadata);
  auto errors = ch.validate();
  if (!errors.empty()) throw std::invalid_argument("invalid channel: " + errors.front());

  ch.support.assign(static_cast<size_t>(s_card) * x_card, Bitset(y_card));
  bool deterministic = true;
  std::vector<int> det(static_cast<size_t>(s_card) * x_card, -1);
  for (int s = 0; s < s_card; ++s) {
    for (int x = 0; x < x_card; ++x) {
      size_t row = static_cast<size_t>(s) * x_card + x;
      for (int y = 0; y < y_card; ++y) {
        double q = ch.prob(s, x, y);
        if (q != 0.0) ch.support[row].set(y);
        if (q == 1.0) det[row] = y;
        if (q != 0.0 && q != 1.0) deterministic = false;
      }
    }
  }
  if (deterministic) ch.det_output = std::move(det);
  return ch;
}

GraphSpec::GraphSpec(int vertex_count_, std::vector<std::pair<int, int>> raw_edges)
    : vertex_count(vertex_count_) {
  if (vertex_count <= 0) throw std::invalid_argument("GraphSpec: vertex_count must be positive");
  for (auto& [a, b] : raw_edges) {
    if (a == b) throw std::invalid_argument("GraphSpec: self-loop");
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= vertex_count) throw std::invalid_argument("GraphSpec: vertex out of range");
  }
  std::sort(raw_edges.begin(), raw_edges.end());
  if (std::adjacent_find(raw_edges.begin(), raw_edges.end()) != raw_edges.end()) {
    throw std::invalid_argument("GraphSpec: duplicate edge");
  }
  edges = std::move(raw_edges);
}

GraphSpec cycle_graph(int m) {
  if (m < 3) throw std::invalid_argument("cycle_graph: m must be >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i) e.emplace_back(i, (i + 1) % m);
  return GraphSpec(m, std::move(e));
}

GraphSpec complete_graph(int m) {
  if (m < 3) throw std::invalid_argument("complete_graph: m must be >= 3");
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) e.emplace_back(a, b);
  }
  return GraphSpec(m, std::move(e));
}

GraphSpec path_graph(int m) {
  if (m < 2) throw std::invalid_argument("path_graph: m must be >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < m; ++i) e.emplace_back(i, i + 1);
  return GraphSpec(m, std::move(e));
}

GraphSpec star_graph(int m) {
  if (m < 2) throw std::invalid_argument("star_graph: m must be >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < m; ++i) e.emplace_back(0, i);
  return GraphSpec(m, std::move(e));
}

GraphSpec petersen_graph() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return GraphSpec(10, std::move(e));
}

StatelessKernel StatelessKernel::from_rows(int x_card, int y_card, std::vector<double> p) {
  if (x_card <= 0 || y_card <= 0 || p.size() != static_cast<size_t>(x_card) * y_card) {
    throw std::invalid_argument("StatelessKernel: size mismatch");
  }
  StatelessKernel k;
  k.x_card = x_card;
  k.y_card = y_card;
  k.p = std::move(p);
  k.support.assign(x_card, Bitset(y_card));
  for (int x = 0; x < x_card; ++x) {
    double sum = 0.0;
    for (int y = 0; y < y_card; ++y) {
      double q = k.p[static_cast<size_t>(x) * y_card + y];
      if (q < 0.0 || q > 1.0) throw std::invalid_argument("StatelessKernel: entry outside [0,1]");
      if (q != 0.0) k.support[x].set(y);
      sum += q;
    }
    if (std::abs(sum - 1.0) > kRowSumTol) {
      throw std::invalid_argument("StatelessKernel: row is not a distribution");
    }
  }
  return k;
}

void InputConstraintMap::validate(int x_card) const {
  if (allowed.size() != reference.size()) {
    throw std::invalid_argument("InputConstraintMap: size mismatch");
  }
  for (size_t s = 0; s < allowed.size(); ++s) {
    if (allowed[s].empty()) throw std::invalid_argument("InputConstraintMap: empty allowed set");
    bool found = false;
    for (int x : allowed[s]) {
      if (x < 0 || x >= x_card) throw std::invalid_argument("InputConstraintMap: input out of range");
      if (x == reference[s]) found = true;
    }
    if (!found) throw std::invalid_argument("InputConstraintMap: reference symbol not allowed");
  }
}

std::vector<double> uniform_dist(int n) {
  if (n <= 0) throw std::invalid_argument("uniform_dist: n must be positive");
  return std::vector<double>(n, 1.0 / n);
}

ChannelWithState endpoint_channel(int vertex_count,
                                  const std::vector<std::pair<int, int>>& oriented_edges,
                                  std::vector<double> state_dist) {
  if (oriented_edges.empty()) throw std::invalid_argument("endpoint_channel: empty edge list");
  if (state_dist.size() != oriented_edges.size()) {
    throw std::invalid_argument("endpoint_channel: state_dist length mismatch");
  }
  check_state_dist(state_dist);
  const int s_card = static_cast<int>(oriented_edges.size());
  const int y_card = vertex_count;
  std::vector<double> kernel(static_cast<size_t>(s_card) * 2 * y_card, 0.0);
  for (int s = 0; s < s_card; ++s) {
    auto [e0, e1] = oriented_edges[s];
    if (e0 < 0 || e0 >= vertex_count || e1 < 0 || e1 >= vertex_count || e0 == e1) {
      throw std::invalid_argument("endpoint_channel: bad edge");
    }
    kernel[(static_cast<size_t>(s) * 2 + 0) * y_card + e0] = 1.0;
    kernel[(static_cast<size_t>(s) * 2 + 1) * y_card + e1] = 1.0;
  }
  return ChannelWithState::from_kernel(2, y_card, s_card, std::move(kernel),
                                       std::move(state_dist));
}

ChannelWithState graph_channel(const GraphSpec& g, std::vector<double> state_dist) {
  if (g.edges.empty()) throw std::invalid_argument("graph_channel: graph has no edges");
  return endpoint_channel(g.vertex_count, g.edges, std::move(state_dist));
}

ChannelWithState noisy_version(const ChannelWithState& ch, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("noisy_version: p outside [0,1]");
  std::vector<double> kernel(ch.kernel.size());
  // Written as (1-p)*(1/|Y|) so the result is bitwise affine in the p=0 and
  // p=1 endpoint channels.
  const double floor = (1.0 - p) * (1.0 / ch.y_card);
  for (size_t i = 0; i < kernel.size(); ++i) kernel[i] = p * ch.kernel[i] + floor;
  auto metadata = ch.metadata;
  return ChannelWithState::from_kernel(ch.x_card, ch.y_card, ch.s_card, std::move(kernel),
                                       ch.state_dist, std::move(metadata));
}

ChannelWithState constrained_channel(const StatelessKernel& base,
                                     const InputConstraintMap& constraints,
                                     std::vector<double> state_dist) {
  constraints.validate(base.x_card);
  if (state_dist.size() != constraints.allowed.size()) {
    throw std::invalid_argument("constrained_channel: state_dist length mismatch");
  }
  check_state_dist(state_dist);
  const int s_card = static_cast<int>(constraints.allowed.size());
  std::vector<double> kernel(static_cast<size_t>(s_card) * base.x_card * base.y_card);
  for (int s = 0; s < s_card; ++s) {
    std::vector<char> is_allowed(base.x_card, 0);
    for (int x : constraints.allowed[s]) is_allowed[x] = 1;
    for (int x = 0; x < base.x_card; ++x) {
      int source = is_allowed[x] ? x : constraints.reference[s];
      for (int y = 0; y < base.y_card; ++y) {
        kernel[(static_cast<size_t>(s) * base.x_card + x) * base.y_card + y] =
            base.p[static_cast<size_t>(source) * base.y_card + y];
      }
    }
  }
  return ChannelWithState::from_kernel(base.x_card, base.y_card, s_card, std::move(kernel),
                                       std::move(state_dist));
}

}  // namespace csitq
