#pragma once

#include <utility>
#include <vector>

namespace corrpack {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// No loops; parallel edges are collapsed at construction and flagged.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    bool had_duplicate_edges = false;

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int edge_count() const;

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;
};

/// Builds a graph from an edge list.  Loops are rejected, out-of-range
/// endpoints are rejected, duplicates are collapsed with a flag.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

/// The Wagner graph M8: the 8-cycle 0..7 plus the four long chords i,i+4.
/// 3-regular and triangle-free.
Graph wagner_m8();

/// Complete bipartite K_{3,t}: side W = {0,1,2}, side U = {3,...,t+2}.
Graph complete_bipartite_k3t(int t);

bool is_connected(const Graph& g);

/// Minimum-degree elimination order (ties broken toward the least vertex id)
/// together with the degeneracy, i.e. the largest degree seen at removal.
/// Coloring greedily in the reverse of this order meets at most that many
/// colored neighbors per step.
std::pair<std::vector<int>, int> degeneracy_order(const Graph& g);

}  // namespace corrpack
