#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "corrpack/compose.hpp"
#include "corrpack/cover.hpp"
#include "corrpack/lowerbound.hpp"
#include "corrpack/planar.hpp"

namespace corrpack {

/// All loaders throw InputError on malformed documents; all writers emit
/// objects with sorted keys, so identical data serializes byte-identically.
///
/// Conventions: vertices are 0-based, colors 1-based.  A matching entry
/// "u,v" (u < v) holds the one-line images of colors 1..t read from u
/// toward v; a null image leaves that color unconstrained and the gaps
/// are filled by the shared greedy completion rule.  Packing colorings
/// use null for uncolored vertices.

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json embedding_to_json(const PlaneEmbedding& emb);
PlaneEmbedding embedding_from_json(const nlohmann::json& j, Graph g);

nlohmann::json matchings_to_json(const Cover& cover);
Cover cover_from_matchings_json(const nlohmann::json& matchings, int t);

nlohmann::json packing_to_json(const Packing& packing);
Packing packing_from_json(const nlohmann::json& j);

/// Graph and cover, optionally dressed as a full near-triangulation
/// packing instance (embedding + boundary + lists + precoloring, all or
/// none).
struct InstanceFile {
    Graph g;
    Cover cover;
    std::optional<NearTriInstance> dressing;
};

nlohmann::json instance_to_json(const InstanceFile& inst);
InstanceFile instance_from_json(const nlohmann::json& j);
InstanceFile make_instance_file(NearTriInstance inst);
InstanceFile make_instance_file(Graph g, Cover cover);

nlohmann::json tree_to_json(const CliqueSumTree& tree);
CliqueSumTree tree_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const RefutationCertificate& cert);
nlohmann::json witness_to_json(const WitnessInfo& wit);
nlohmann::json report_to_json(const CheckReport& report);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace corrpack
