#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "perco/error.hpp"

namespace perco {

// Edge subsets of a small graph are bit masks over the edge indexing.
using EdgeMask = std::uint32_t;

// Exhaustive subset enumeration is refused above this many edges, and
// automorphism listing above this many vertices.
inline constexpr int kMaxExhaustiveEdges = 24;
inline constexpr int kMaxAutomorphismVertices = 10;

struct VertexPermutation {
    std::vector<int> map; // map[v] = image of v, 0-based

    VertexPermutation compose(const VertexPermutation& other) const; // this after other
    VertexPermutation inverse() const;
    bool operator==(const VertexPermutation&) const = default;
};

// A small labeled graph with a stable edge indexing. Vertices are 0..n-1
// internally; the JSON format and builders speak 1-based labels. Builders
// index edges lexicographically on (min endpoint, max endpoint) so that
// serialization and LP column order are reproducible; graphs loaded from a
// file keep the file's edge order.
class LabeledGraph {
public:
    LabeledGraph() : LabeledGraph(1, {}, true) {} // single vertex, no edges
    LabeledGraph(int n, std::vector<std::pair<int, int>> edges_1based, bool sort_lexicographic);

    static LabeledGraph path(int n);
    static LabeledGraph cycle(int n);
    static LabeledGraph complete(int n);
    static LabeledGraph cartesian_product(const LabeledGraph& g, const LabeledGraph& h);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    std::pair<int, int> edge(int i) const { return edges_[static_cast<size_t>(i)]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    int edge_index(int u, int v) const; // -1 if not an edge
    bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

    bool is_connected() const;
    // Spanning subgraph ([n], mask) connectivity: true iff it contains a
    // spanning tree. The empty graph on one vertex counts as connected.
    bool is_connected_subgraph(EdgeMask open) const;

    // Vertex support of an edge subset, as a bit mask (requires n <= 64).
    std::uint64_t support_of(EdgeMask mask) const;

    // All unordered pairs {S,T} of nonempty edge subsets whose vertex supports
    // are disjoint, sorted by (min mask, max mask).
    std::vector<std::pair<EdgeMask, EdgeMask>> disjoint_support_pairs() const;

    // Full automorphism group by backtracking over vertex images.
    std::vector<VertexPermutation> automorphisms() const;

    // Image of an edge subset under a vertex permutation (must be an automorphism).
    EdgeMask permute_mask(EdgeMask mask, const VertexPermutation& sigma) const;

    bool operator==(const LabeledGraph&) const = default;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_; // (u,v) with u < v, 0-based
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<long long, int>> lookup_; // (u*n+v, index), sorted
};

// Least superset of `seed` closed under "add v once it has >= 2 neighbours
// inside". Returns a sorted vertex list.
std::vector<int> bootstrap_closure(const LabeledGraph& g, const std::vector<int>& seed);

// Shells T_0={v0}, T_k = closure(N(T_{k-1})) minus earlier shells. Checks that
// every vertex of T_k sees at most one neighbour in T_{k-1} and refuses the
// graph otherwise; this is the property the period-6 coloring needs.
std::vector<std::vector<int>> shell_partition(const LabeledGraph& g, int v0);

} // namespace perco
