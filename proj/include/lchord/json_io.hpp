#pragma once

#include <string_view>
#include <vector>

#include "json.hpp"
#include "lchord/chordalize.hpp"
#include "lchord/holes.hpp"
#include "lchord/index.hpp"
#include "lchord/oracles.hpp"
#include "lchord/report.hpp"

namespace lchord {

using Json = nlohmann::ordered_json;

Json to_json(const Graph& g);
Json to_json(const Hole& h);
Json to_json(const HoleSet& hs);
Json to_json(const HoleComponents& c);
Json to_json(const Partition& p);
Json to_json(const EdgeSet& edges);
/// Stage graphs appear as canonical edgelist strings.
Json to_json(const ChainTrace& trace);
Json to_json(const IndexResult& r);
Json to_json(const AnalysisReport& r);
Json to_json(const EflCertificate& c);
Json to_json(const SetNc& nc);

/// Resolves a vertex token: a graph label, or a decimal id.
Vertex resolve_vertex(const Graph& g, const nlohmann::json& token);

/// [[...], [...]] of labels or ids.
Partition parse_partition(const Graph& g, std::string_view json_text);
/// [...] of labels or ids.
std::vector<Vertex> parse_vertex_list(const Graph& g, std::string_view json_text);
/// {"lists": {"id or label": [colors...]}}; vertices not named get no list
/// and are rejected.
ListAssignment parse_list_assignment(const Graph& g, std::string_view json_text);
/// {"k": int, "edges": {"u-v": [[cu, cv], ...]}}
Correspondence parse_correspondence(const Graph& g, std::string_view json_text);

}  // namespace lchord
