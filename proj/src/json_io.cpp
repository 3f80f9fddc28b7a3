#include "corrpack/json_io.hpp"

#include <fstream>
#include <utility>

#include "corrpack/error.hpp"

namespace corrpack {

using nlohmann::json;

namespace {

/// Runs a parser body and turns any nlohmann type/lookup error into an
/// InputError carrying the document kind.
template <class F>
auto parsing(const char* what, F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed ") + what + ": " + e.what());
    }
}

std::pair<int, int> parse_edge_key(const std::string& key) {
    const auto comma = key.find(',');
    require(comma != std::string::npos && comma > 0 && comma + 1 < key.size(),
            "matching key must look like \"u,v\", got \"" + key + "\"");
    int u, v;
    try {
        std::size_t used_u = 0, used_v = 0;
        u = std::stoi(key, &used_u);
        v = std::stoi(key.substr(comma + 1), &used_v);
        require(used_u == comma && used_v == key.size() - comma - 1,
                "matching key has trailing characters: \"" + key + "\"");
    } catch (const std::exception&) {
        throw InputError("matching key must hold two integers: \"" + key + "\"");
    }
    require(u >= 0 && v > u, "matching key must satisfy 0 <= u < v: \"" + key + "\"");
    return {u, v};
}

std::string edge_key(int u, int v) {
    return std::to_string(u) + "," + std::to_string(v);
}

}  // namespace

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"n", g.n}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    return parsing("graph", [&] {
        const int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) {
            require(e.is_array() && e.size() == 2, "graph edge must be a pair");
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        }
        return build_graph(n, edges);
    });
}

json embedding_to_json(const PlaneEmbedding& emb) {
    json rot = json::array();
    for (const auto& row : emb.rotations) rot.push_back(row);
    json outer;
    if (emb.outer_face >= 0) {
        auto faces = trace_faces(emb);
        ensure(emb.outer_face < static_cast<int>(faces.size()),
               "outer face index out of range");
        outer = faces[static_cast<std::size_t>(emb.outer_face)];
    }
    return json{{"rotations", std::move(rot)}, {"outer_face", std::move(outer)}};
}

PlaneEmbedding embedding_from_json(const json& j, Graph g) {
    return parsing("embedding", [&] {
        PlaneEmbedding emb;
        emb.g = std::move(g);
        for (const auto& row : j.at("rotations"))
            emb.rotations.push_back(row.get<std::vector<int>>());
        auto faces = trace_faces(emb);
        const auto& outer = j.at("outer_face");
        if (outer.is_null()) {
            emb.outer_face = -1;
        } else {
            const auto walk = outer.get<std::vector<int>>();
            for (std::size_t i = 0; i < faces.size(); ++i)
                if (same_cycle(faces[i], walk)) {
                    emb.outer_face = static_cast<int>(i);
                    break;
                }
            require(emb.outer_face >= 0,
                    "outer_face walk matches no face of the rotation system");
        }
        return emb;
    });
}

json matchings_to_json(const Cover& cover) {
    json out = json::object();
    for (auto [u, v] : cover.keys_sorted())
        out[edge_key(u, v)] = cover.matching(u, v).fwd;
    return out;
}

Cover cover_from_matchings_json(const json& matchings, int t) {
    return parsing("matchings", [&] {
        require(t >= 1 && t <= 64, "t must lie in [1, 64]");
        require(matchings.is_object(), "matchings must be an object");
        Cover cover(t);
        for (const auto& [key, val] : matchings.items()) {
            auto [u, v] = parse_edge_key(key);
            require(val.is_array() && static_cast<int>(val.size()) == t,
                    "matching \"" + key + "\" must list " + std::to_string(t) +
                        " images");
            bool partial = false;
            for (const auto& x : val) partial = partial || x.is_null();
            if (partial) {
                std::vector<std::pair<int, int>> pairs;
                for (int a = 1; a <= t; ++a)
                    if (!val.at(a - 1).is_null())
                        pairs.emplace_back(a, val.at(a - 1).get<int>());
                cover.set_matching(u, v,
                                   Perm::from_one_line(complete_partial_perm(t, pairs)));
            } else {
                cover.set_matching(u, v, Perm::from_one_line(val.get<std::vector<int>>()));
            }
        }
        return cover;
    });
}

json packing_to_json(const Packing& packing) {
    json colorings = json::array();
    for (const auto& row : packing.colorings) {
        json jr = json::array();
        for (int c : row) {
            if (c == 0)
                jr.push_back(nullptr);
            else
                jr.push_back(c);
        }
        colorings.push_back(std::move(jr));
    }
    return json{{"s", packing.s}, {"colorings", std::move(colorings)}};
}

Packing packing_from_json(const json& j) {
    return parsing("packing", [&] {
        Packing packing;
        packing.s = j.at("s").get<int>();
        const auto& colorings = j.at("colorings");
        require(colorings.is_array() &&
                    static_cast<int>(colorings.size()) == packing.s,
                "packing must list exactly s colorings");
        std::size_t n = 0;
        for (const auto& row : colorings) {
            require(row.is_array(), "coloring must be an array");
            require(packing.colorings.empty() || row.size() == n,
                    "colorings must agree on the vertex count");
            n = row.size();
            std::vector<int> out;
            for (const auto& c : row) {
                if (c.is_null()) {
                    out.push_back(0);
                } else {
                    const int v = c.get<int>();
                    require(v >= 1, "colors are 1-based; use null for uncolored");
                    out.push_back(v);
                }
            }
            packing.colorings.push_back(std::move(out));
        }
        require(packing.s >= 1, "packing needs at least one coloring");
        return packing;
    });
}

InstanceFile make_instance_file(NearTriInstance inst) {
    InstanceFile f;
    f.g = inst.emb.g;
    f.cover = inst.cover;
    f.dressing = std::move(inst);
    return f;
}

InstanceFile make_instance_file(Graph g, Cover cover) {
    InstanceFile f;
    f.g = std::move(g);
    f.cover = std::move(cover);
    return f;
}

json instance_to_json(const InstanceFile& inst) {
    json j{{"t", inst.cover.t()},
           {"graph", graph_to_json(inst.g)},
           {"matchings", matchings_to_json(inst.cover)}};
    if (inst.dressing) {
        const NearTriInstance& d = *inst.dressing;
        j["embedding"] = embedding_to_json(d.emb);
        j["boundary"] = d.boundary.verts;
        json lists = json::array();
        for (int v = 0; v < d.emb.g.n; ++v) {
            json per = json::array();
            for (int s = 0; s < 3; ++s) per.push_back(d.lists.at(s, v).to_vector());
            lists.push_back(std::move(per));
        }
        j["lists"] = std::move(lists);
        json pre = json::array();
        for (const auto& row : d.precolor)
            pre.push_back(json::array({row[0], row[1], row[2]}));
        j["precoloring"] = std::move(pre);
    }
    return j;
}

InstanceFile instance_from_json(const json& j) {
    return parsing("instance", [&] {
        InstanceFile inst;
        const int t = j.at("t").get<int>();
        inst.g = graph_from_json(j.at("graph"));
        inst.cover = cover_from_matchings_json(j.at("matchings"), t);
        for (auto [u, v] : inst.cover.keys_sorted())
            require(inst.g.has_edge(u, v), "matching on the non-edge " + edge_key(u, v));
        for (auto [u, v] : inst.g.edges())
            require(inst.cover.has_matching(u, v),
                    "missing matching for edge " + edge_key(u, v));

        const bool any = j.contains("embedding") || j.contains("boundary") ||
                         j.contains("lists") || j.contains("precoloring");
        if (!any) return inst;
        require(j.contains("embedding") && j.contains("boundary") &&
                    j.contains("lists") && j.contains("precoloring"),
                "a dressed instance needs embedding, boundary, lists and "
                "precoloring together");

        NearTriInstance d;
        d.emb = embedding_from_json(j.at("embedding"), inst.g);
        d.cover = inst.cover;
        d.boundary.verts = j.at("boundary").get<std::vector<int>>();
        const auto& lists = j.at("lists");
        require(lists.is_array() && static_cast<int>(lists.size()) == inst.g.n,
                "lists must cover every vertex");
        d.lists = ListSystem::make(3, inst.g.n, ColorSet{});
        for (int v = 0; v < inst.g.n; ++v) {
            const auto& per = lists.at(static_cast<std::size_t>(v));
            require(per.is_array() && per.size() == 3,
                    "each vertex needs three lists");
            for (int s = 0; s < 3; ++s)
                for (const auto& c : per.at(static_cast<std::size_t>(s)))
                    d.lists.at(s, v).insert(c.get<int>());
        }
        const auto& pre = j.at("precoloring");
        require(pre.is_array() && pre.size() == 2,
                "precoloring lists the first two boundary vertices");
        for (int h = 0; h < 2; ++h) {
            const auto& row = pre.at(static_cast<std::size_t>(h));
            require(row.is_array() && row.size() == 3,
                    "each precolored vertex needs three colors");
            for (int s = 0; s < 3; ++s)
                d.precolor[static_cast<std::size_t>(h)][static_cast<std::size_t>(s)] =
                    row.at(static_cast<std::size_t>(s)).get<int>();
        }
        inst.dressing = std::move(d);
        return inst;
    });
}

json tree_to_json(const CliqueSumTree& tree) {
    json pieces = json::array();
    for (const Piece& p : tree.pieces) {
        if (p.kind == Piece::Kind::M8) {
            pieces.push_back(json{{"kind", "m8"}});
        } else {
            pieces.push_back(json{{"kind", "planar"},
                                  {"graph", graph_to_json(p.emb.g)},
                                  {"embedding", embedding_to_json(p.emb)}});
        }
    }
    json joins = json::array();
    for (const Join& jn : tree.joins) {
        json identify = json::array();
        for (auto [a, b] : jn.identify) identify.push_back(json::array({a, b}));
        json left;
        if (jn.left == Join::kAcc)
            left = "acc";
        else
            left = jn.left;
        joins.push_back(json{{"left", std::move(left)},
                             {"right", jn.right},
                             {"r", jn.r},
                             {"identify", std::move(identify)}});
    }
    return json{{"pieces", std::move(pieces)}, {"joins", std::move(joins)}};
}

CliqueSumTree tree_from_json(const json& j) {
    return parsing("tree", [&] {
        CliqueSumTree tree;
        for (const auto& jp : j.at("pieces")) {
            const auto kind = jp.at("kind").get<std::string>();
            if (kind == "m8") {
                tree.pieces.push_back(make_m8_piece());
            } else if (kind == "planar") {
                Graph g = graph_from_json(jp.at("graph"));
                tree.pieces.push_back(
                    make_planar_piece(embedding_from_json(jp.at("embedding"), std::move(g))));
            } else {
                throw InputError("unknown piece kind \"" + kind + "\"");
            }
        }
        for (const auto& jj : j.at("joins")) {
            Join jn;
            const auto& left = jj.at("left");
            if (left.is_string()) {
                require(left.get<std::string>() == "acc",
                        "join left must be a piece index or \"acc\"");
                jn.left = Join::kAcc;
            } else {
                jn.left = left.get<int>();
            }
            jn.right = jj.at("right").get<int>();
            jn.r = jj.at("r").get<int>();
            for (const auto& pair : jj.at("identify")) {
                require(pair.is_array() && pair.size() == 2,
                        "identify entries are pairs");
                jn.identify.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
            }
            tree.joins.push_back(std::move(jn));
        }
        return tree;
    });
}

json witness_to_json(const WitnessInfo& wit) {
    json residual = json::array();
    for (const ColorSet& s : wit.residual) residual.push_back(s.to_vector());
    return json{{"u", wit.u},
                {"matching_ranks", wit.matching_ranks},
                {"residual", std::move(residual)}};
}

json certificate_to_json(const RefutationCertificate& cert) {
    json samples = json::array();
    for (const auto& [rank, wit] : cert.samples) {
        json entry = witness_to_json(wit);
        entry["rank"] = rank;
        samples.push_back(std::move(entry));
    }
    json first;
    if (cert.first_unrefuted) first = *cert.first_unrefuted;
    return json{{"candidates", cert.candidates_checked},
                {"refuted", cert.candidates_refuted},
                {"all_refuted", cert.all_refuted},
                {"first_unrefuted", std::move(first)},
                {"sample_witnesses", std::move(samples)}};
}

json report_to_json(const CheckReport& report) {
    json violations = json::array();
    for (const Violation& v : report.violations) violations.push_back(v.to_string());
    return json{{"ok", report.ok()}, {"violations", std::move(violations)}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    require(out.good(), "cannot write " + path);
    out << j.dump(2) << '\n';
    out.flush();
    require(out.good(), "failed while writing " + path);
}

}  // namespace corrpack
