#pragma once

#include <string>

#include "csitq/channels.hpp"
#include "json.hpp"

namespace csitq {

/// JSON document layout:
///   {"x_card":2, "y_card":5, "s_card":5,
///    "kernel":[[[...y...],...x...],...s...],
///    "state_dist":[...], "metadata":{"name":"..."}}
/// Keys serialize in alphabetical order, so save/load round-trips are
/// byte-identical.
nlohmann::json channel_to_json(const ChannelWithState& ch);
ChannelWithState channel_from_json(const nlohmann::json& j);

void save_channel(const ChannelWithState& ch, const std::string& path);
ChannelWithState load_channel(const std::string& path);

/// Graph document: {"vertex_count":5, "edges":[[0,1],[1,2],...]}
nlohmann::json graph_to_json(const GraphSpec& g);
GraphSpec graph_from_json(const nlohmann::json& j);
GraphSpec load_graph(const std::string& path);

}  // namespace csitq
