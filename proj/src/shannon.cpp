#include "csitq/shannon.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

#include "csitq/entropy.hpp"
#include "csitq/util.hpp"

namespace csitq {

namespace {
constexpr int64_t kMaxStrategies = int64_t{1} << 26;
}

std::vector<int> StrategyChannel::strategy_map(int t) const {
  std::vector<int> map(s_card);
  for (int s = 0; s < s_card; ++s) {
    map[s] = t % x_card;
    t /= x_card;
  }
  return map;
}

int StrategyChannel::strategy_index(const std::vector<int>& map) const {
  int t = 0;
  for (int s = s_card - 1; s >= 0; --s) t = t * x_card + map[s];
  return t;
}

StrategyChannel shannon_strategy_channel(const ChannelWithState& ch) {
  double log_count = ch.s_card * std::log2(static_cast<double>(ch.x_card));
  if (log_count > 26.0) {
    throw std::invalid_argument("shannon_strategy_channel: x_card^s_card exceeds 2^26");
  }
  int64_t count = 1;
  for (int s = 0; s < ch.s_card; ++s) count *= ch.x_card;
  if (count > kMaxStrategies) {
    throw std::invalid_argument("shannon_strategy_channel: x_card^s_card exceeds 2^26");
  }

  StrategyChannel out;
  out.strategy_count = static_cast<int>(count);
  out.y_card = ch.y_card;
  out.x_card = ch.x_card;
  out.s_card = ch.s_card;
  out.w.assign(static_cast<size_t>(count) * ch.y_card, 0.0);
  for (int t = 0; t < out.strategy_count; ++t) {
    std::vector<int> map = out.strategy_map(t);
    for (int s = 0; s < ch.s_card; ++s) {
      double ws = ch.state_dist[s];
      for (int y = 0; y < ch.y_card; ++y) {
        out.w[static_cast<size_t>(t) * ch.y_card + y] += ws * ch.prob(s, map[s], y);
      }
    }
  }
  return out;
}

CapacityReport blahut_arimoto(const StrategyChannel& w, double tol, int max_iter,
                              std::vector<double>* lower_bound_trace) {
  if (!(tol > 0.0)) throw std::invalid_argument("blahut_arimoto: tol must be positive");
  const int nt = w.strategy_count;
  const int ny = w.y_card;

  std::vector<double> p(nt, 1.0 / nt);
  std::vector<double> q(ny);
  std::vector<double> d(nt);
  CapacityReport report;

  for (int iter = 1; iter <= max_iter; ++iter) {
    std::fill(q.begin(), q.end(), 0.0);
    for (int t = 0; t < nt; ++t) {
      double pt = p[t];
      if (pt == 0.0) continue;
      for (int y = 0; y < ny; ++y) q[y] += pt * w.prob(t, y);
    }
    // Relative entropies D(W(.|t) || q); q(y)=0 implies W(y|t)=0 for every t
    // currently in the support, and the uniform start keeps all outputs in
    // the mixture reachable.
    double lower = 0.0, upper = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < nt; ++t) {
      double dt = 0.0;
      for (int y = 0; y < ny; ++y) {
        double wy = w.prob(t, y);
        if (wy > 0.0) dt += wy * std::log2(wy / q[y]);
      }
      d[t] = dt;
      lower += p[t] * dt;
      upper = std::max(upper, dt);
    }
    if (lower_bound_trace) lower_bound_trace->push_back(lower);

    report.capacity_bits = lower;
    report.gap_bound = std::max(upper - lower, 0.0);
    report.iterations = iter;
    if (report.gap_bound <= tol) {
      report.converged = true;
      break;
    }
    double norm = 0.0;
    for (int t = 0; t < nt; ++t) {
      p[t] *= std::exp2(d[t]);
      norm += p[t];
    }
    for (int t = 0; t < nt; ++t) p[t] /= norm;
  }
  report.input_dist = std::move(p);
  return report;
}

double complete_graph_capacity(int m, double p) {
  if (m < 3) throw std::invalid_argument("complete_graph_capacity: m must be >= 3");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("complete_graph_capacity: p outside [0,1]");
  double sum = 0.0;
  for (int k = 1; k <= m; ++k) {
    double c = static_cast<double>(m - 2 * k + 1) / (m - 1);
    sum += xlog2_1p(p * c);
  }
  return sum / m;
}

namespace {

struct EnumerationSlice {
  double best = std::numeric_limits<double>::infinity();
  uint64_t best_encoding = 0;
};

EnumerationSlice scan_range(int edge_count, const std::vector<std::pair<int, int>>& edges,
                            int m, double p, uint64_t begin, uint64_t end) {
  EnumerationSlice slice;
  std::vector<double> dist(m);
  const double weight = p * 2.0 / (m * (m - 1));
  const double floor = (1.0 - p) * (1.0 / m);
  for (uint64_t enc = begin; enc < end; ++enc) {
    std::fill(dist.begin(), dist.end(), 0.0);
    for (int s = 0; s < edge_count; ++s) {
      const auto& e = edges[s];
      dist[(enc >> s) & 1 ? e.second : e.first] += weight;
    }
    double h = 0.0;
    for (int y = 0; y < m; ++y) {
      double q = dist[y] + floor;
      if (q > 0.0) h -= q * std::log2(q);
    }
    if (h < slice.best) {
      slice.best = h;
      slice.best_encoding = enc;
    }
  }
  return slice;
}

}  // namespace

MinOutputEntropyResult min_output_entropy_bruteforce(int m, double p, int workers) {
  if (m < 3) throw std::invalid_argument("min_output_entropy_bruteforce: m must be >= 3");
  const int edge_count = m * (m - 1) / 2;
  if (edge_count > 24) {
    throw std::invalid_argument("min_output_entropy_bruteforce: m too large for enumeration");
  }
  std::vector<std::pair<int, int>> edges = complete_graph(m).edges;
  const uint64_t total = uint64_t{1} << edge_count;
  if (workers <= 0) workers = worker_count();
  workers = std::min<uint64_t>(workers, total);

  std::vector<std::future<EnumerationSlice>> futures;
  uint64_t chunk = (total + workers - 1) / workers;
  for (int k = 0; k < workers; ++k) {
    uint64_t begin = k * chunk;
    uint64_t end = std::min(total, begin + chunk);
    if (begin >= end) break;
    futures.push_back(std::async(std::launch::async, scan_range, edge_count, std::cref(edges),
                                 m, p, begin, end));
  }
  // Slices are merged in ascending range order with a strict comparison, so
  // the smallest encoding wins ties regardless of the worker count.
  EnumerationSlice best;
  for (auto& f : futures) {
    EnumerationSlice s = f.get();
    if (s.best < best.best) best = s;
  }

  MinOutputEntropyResult result;
  result.value = best.best;
  result.enumerated = total;
  result.choice.resize(edge_count);
  std::vector<double> v(m, 0.0);
  for (int s = 0; s < edge_count; ++s) {
    int bit = (best.best_encoding >> s) & 1;
    result.choice[s] = static_cast<uint8_t>(bit);
    v[bit ? edges[s].second : edges[s].first] += 2.0 / (m * (m - 1));
  }
  result.v = std::move(v);
  return result;
}

}  // namespace csitq
