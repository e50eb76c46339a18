#include "csitq/channel_io.hpp"

#include <fstream>
#include <stdexcept>

namespace csitq {

using nlohmann::json;

json channel_to_json(const ChannelWithState& ch) {
  json j;
  j["x_card"] = ch.x_card;
  j["y_card"] = ch.y_card;
  j["s_card"] = ch.s_card;
  json kernel = json::array();
  for (int s = 0; s < ch.s_card; ++s) {
    json per_x = json::array();
    for (int x = 0; x < ch.x_card; ++x) {
      json row = json::array();
      for (int y = 0; y < ch.y_card; ++y) row.push_back(ch.prob(s, x, y));
      per_x.push_back(std::move(row));
    }
    kernel.push_back(std::move(per_x));
  }
  j["kernel"] = std::move(kernel);
  j["state_dist"] = ch.state_dist;
  if (!ch.metadata.empty()) j["metadata"] = ch.metadata;
  return j;
}

ChannelWithState channel_from_json(const json& j) {
  int x_card = j.at("x_card").get<int>();
  int y_card = j.at("y_card").get<int>();
  int s_card = j.at("s_card").get<int>();
  if (x_card <= 0 || y_card <= 0 || s_card <= 0) {
    throw std::invalid_argument("channel json: cardinalities must be positive");
  }
  const auto& kj = j.at("kernel");
  if (static_cast<int>(kj.size()) != s_card) {
    throw std::invalid_argument("channel json: kernel has wrong s dimension");
  }
  std::vector<double> kernel;
  kernel.reserve(static_cast<size_t>(s_card) * x_card * y_card);
  for (int s = 0; s < s_card; ++s) {
    const auto& xs = kj.at(s);
    if (static_cast<int>(xs.size()) != x_card) {
      throw std::invalid_argument("channel json: kernel has wrong x dimension");
    }
    for (int x = 0; x < x_card; ++x) {
      const auto& row = xs.at(x);
      if (static_cast<int>(row.size()) != y_card) {
        throw std::invalid_argument("channel json: kernel has wrong y dimension");
      }
      for (int y = 0; y < y_card; ++y) kernel.push_back(row.at(y).get<double>());
    }
  }
  std::vector<double> state_dist = j.at("state_dist").get<std::vector<double>>();
  std::map<std::string, std::string> metadata;
  if (j.contains("metadata")) {
    metadata = j.at("metadata").get<std::map<std::string, std::string>>();
  }
  return ChannelWithState::from_kernel(x_card, y_card, s_card, std::move(kernel),
                                       std::move(state_dist), std::move(metadata));
}

void save_channel(const ChannelWithState& ch, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << channel_to_json(ch).dump(2) << '\n';
}

ChannelWithState load_channel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  json j = json::parse(in);
  return channel_from_json(j);
}

json graph_to_json(const GraphSpec& g) {
  json j;
  j["vertex_count"] = g.vertex_count;
  json edges = json::array();
  for (auto [a, b] : g.edges) edges.push_back(json::array({a, b}));
  j["edges"] = std::move(edges);
  return j;
}

GraphSpec graph_from_json(const json& j) {
  int vertex_count = j.at("vertex_count").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (e.size() != 2) throw std::invalid_argument("graph json: edge must have two endpoints");
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return GraphSpec(vertex_count, std::move(edges));
}

GraphSpec load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return graph_from_json(json::parse(in));
}

}  // namespace csitq
