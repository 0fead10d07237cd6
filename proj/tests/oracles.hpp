#pragma once

// Independent brute-force oracles used by the unit and acceptance suites.
// These deliberately use the dumbest possible algorithms and never share code
// with the implementation paths they check.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "perco/graph.hpp"
#include "perco/measure.hpp"

namespace perco::oracle {

// All unordered pairs of nonempty edge subsets with disjoint vertex supports,
// by a plain double loop over all 4^m pairs.
inline std::vector<std::pair<EdgeMask, EdgeMask>> disjoint_pairs(const LabeledGraph& g) {
    std::vector<std::pair<EdgeMask, EdgeMask>> out;
    auto support = [&](EdgeMask mask) {
        std::uint64_t s = 0;
        for (int i = 0; i < g.m(); ++i)
            if (mask >> i & 1u) {
                auto [u, v] = g.edge(i);
                s |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
            }
        return s;
    };
    EdgeMask full = (EdgeMask{1} << g.m()) - 1;
    for (EdgeMask s = 1; s <= full; ++s)
        for (EdgeMask t = s + 1; t <= full; ++t)
            if ((support(s) & support(t)) == 0) out.emplace_back(s, t);
    std::sort(out.begin(), out.end());
    return out;
}

// Full automorphism group by filtering every permutation.
inline std::vector<std::vector<int>> automorphisms(const LabeledGraph& g) {
    std::vector<int> perm(static_cast<size_t>(g.n()));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int u = 0; u < g.n() && ok; ++u)
            for (int v = u + 1; v < g.n() && ok; ++v)
                if (g.adjacent(u, v) !=
                    g.adjacent(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]))
                    ok = false;
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Crossing probability of a vertex-based measure on P_length x fiber by full
// joint-state enumeration and breadth-first search.
inline Rat crossing_probability(const VertexBasedMeasure& vbm, int length,
                                const LabeledGraph& fiber) {
    const auto& g = vbm.graph;
    int fn = fiber.n();
    std::vector<int> state(static_cast<size_t>(g.n()), 0);
    Rat total(0);
    while (true) {
        Rat prob(1);
        for (int v = 0; v < g.n(); ++v)
            prob *= vbm.state_dists[static_cast<size_t>(v)][static_cast<size_t>(state[static_cast<size_t>(v)])];
        if (prob != 0) {
            // open edges, then BFS from the left face
            std::vector<char> seen(static_cast<size_t>(g.n()), 0);
            std::vector<int> stack;
            for (int u = 0; u < fn; ++u) {
                seen[static_cast<size_t>(u)] = 1;
                stack.push_back(u);
            }
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : g.adjacency()[static_cast<size_t>(v)]) {
                    if (seen[static_cast<size_t>(w)]) continue;
                    int e = g.edge_index(std::min(v, w), std::max(v, w));
                    int su = state[static_cast<size_t>(std::min(v, w))];
                    int sv = state[static_cast<size_t>(std::max(v, w))];
                    if (!vbm.open(e, su, sv)) continue;
                    seen[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
            bool crossed = false;
            for (int u = 0; u < fn; ++u)
                if (seen[static_cast<size_t>((length - 1) * fn + u)]) crossed = true;
            if (crossed) total += prob;
        }
        int v = 0;
        for (; v < g.n(); ++v) {
            if (++state[static_cast<size_t>(v)] < vbm.state_count(v)) break;
            state[static_cast<size_t>(v)] = 0;
        }
        if (v == g.n()) break;
    }
    return total;
}

// Connectivity of the product measure with every edge open independently with
// probability p (the 0-independent baseline curve).
inline Rat product_connectivity(const LabeledGraph& g, const Rat& p) {
    Rat total(0);
    for (EdgeMask h = 0; h < (EdgeMask{1} << g.m()); ++h) {
        if (!g.is_connected_subgraph(h)) continue;
        Rat w(1);
        for (int e = 0; e < g.m(); ++e) w *= (h >> e & 1u) ? p : Rat(1 - p);
        total += w;
    }
    return total;
}

// A deterministically seeded random graph on n vertices with m edges (used to
// widen oracle coverage beyond the named families).
inline LabeledGraph random_graph(int n, int m, std::uint64_t seed) {
    std::vector<std::pair<int, int>> all;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
    std::uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    for (size_t i = all.size(); i > 1; --i) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        std::swap(all[i - 1], all[(state >> 33) % i]);
    }
    all.resize(static_cast<size_t>(m));
    return LabeledGraph(n, std::move(all), true);
}

} // namespace perco::oracle
