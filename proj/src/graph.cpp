#include "perco/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace perco {

const char* err_name(Err e) {
    switch (e) {
        case Err::invalid_size: return "InvalidSize";
        case Err::exhaustive_limit_exceeded: return "ExhaustiveLimitExceeded";
        case Err::not_two_percolation_compatible: return "NotTwoPercolationCompatible";
        case Err::negative_weight: return "NegativeWeight";
        case Err::mass_mismatch: return "MassMismatch";
        case Err::target_above_marginal: return "TargetAboveMarginal";
        case Err::state_space_too_large: return "StateSpaceTooLarge";
        case Err::below_validity_threshold: return "BelowValidityThreshold";
        case Err::out_of_piece: return "OutOfPiece";
        case Err::out_of_range: return "OutOfRange";
        case Err::above_threshold: return "AboveThreshold";
        case Err::non_linear_programme: return "NonLinearProgramme";
        case Err::infeasible: return "Infeasible";
        case Err::unbounded: return "Unbounded";
        case Err::singular_system: return "SingularSystem";
        case Err::no_sign_change: return "NoSignChange";
        case Err::fiber_too_large: return "FiberTooLarge";
        case Err::usage_error: return "UsageError";
        case Err::io_error: return "IoError";
        case Err::internal: return "InternalError";
    }
    return "UnknownError";
}

VertexPermutation VertexPermutation::compose(const VertexPermutation& other) const {
    VertexPermutation out;
    out.map.resize(map.size());
    for (size_t v = 0; v < map.size(); ++v) out.map[v] = map[static_cast<size_t>(other.map[v])];
    return out;
}

VertexPermutation VertexPermutation::inverse() const {
    VertexPermutation out;
    out.map.resize(map.size());
    for (size_t v = 0; v < map.size(); ++v) out.map[static_cast<size_t>(map[v])] = static_cast<int>(v);
    return out;
}

LabeledGraph::LabeledGraph(int n, std::vector<std::pair<int, int>> edges_1based,
                           bool sort_lexicographic)
    : n_(n) {
    require(n >= 1, Err::invalid_size, "graph needs at least one vertex");
    edges_.reserve(edges_1based.size());
    for (auto [u, v] : edges_1based) {
        require(u >= 1 && u <= n && v >= 1 && v <= n, Err::invalid_size,
                "edge endpoint outside [1.." + std::to_string(n) + "]");
        require(u != v, Err::invalid_size, "self-loop");
        int a = std::min(u, v) - 1, b = std::max(u, v) - 1;
        edges_.emplace_back(a, b);
    }
    if (sort_lexicographic) std::sort(edges_.begin(), edges_.end());
    {
        auto copy = edges_;
        std::sort(copy.begin(), copy.end());
        for (size_t i = 1; i < copy.size(); ++i)
            require(copy[i] != copy[i - 1], Err::invalid_size, "duplicate edge");
    }
    adj_.assign(static_cast<size_t>(n_), {});
    for (auto [a, b] : edges_) {
        adj_[static_cast<size_t>(a)].push_back(b);
        adj_[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& lst : adj_) std::sort(lst.begin(), lst.end());
    lookup_.reserve(edges_.size());
    for (size_t i = 0; i < edges_.size(); ++i)
        lookup_.emplace_back(static_cast<long long>(edges_[i].first) * n_ + edges_[i].second,
                             static_cast<int>(i));
    std::sort(lookup_.begin(), lookup_.end());
}

LabeledGraph LabeledGraph::path(int n) {
    require(n >= 2, Err::invalid_size, "path needs n >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return LabeledGraph(n, std::move(e), true);
}

LabeledGraph LabeledGraph::cycle(int n) {
    require(n >= 3, Err::invalid_size, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(1, n);
    return LabeledGraph(n, std::move(e), true);
}

LabeledGraph LabeledGraph::complete(int n) {
    require(n >= 2, Err::invalid_size, "complete graph needs n >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
    return LabeledGraph(n, std::move(e), true);
}

LabeledGraph LabeledGraph::cartesian_product(const LabeledGraph& g, const LabeledGraph& h) {
    int n = g.n() * h.n();
    std::vector<std::pair<int, int>> e;
    auto id = [&](int x, int u) { return x * h.n() + u + 1; }; // 1-based
    for (int x = 0; x < g.n(); ++x)
        for (auto [u, v] : h.edges()) e.emplace_back(id(x, u), id(x, v));
    for (auto [x, y] : g.edges())
        for (int u = 0; u < h.n(); ++u) e.emplace_back(id(x, u), id(y, u));
    return LabeledGraph(n, std::move(e), true);
}

int LabeledGraph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    long long key = static_cast<long long>(u) * n_ + v;
    auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(key, -1));
    if (it != lookup_.end() && it->first == key) return it->second;
    return -1;
}

bool LabeledGraph::is_connected() const {
    if (m() > 30) {
        // component scan without masks for big graphs
        std::vector<char> seen(static_cast<size_t>(n_), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[static_cast<size_t>(v)])
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n_;
    }
    return is_connected_subgraph(m() == 0 ? 0 : ((EdgeMask{1} << m()) - 1));
}

bool LabeledGraph::is_connected_subgraph(EdgeMask open) const {
    std::vector<int> parent(static_cast<size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    int comps = n_;
    for (int i = 0; i < m(); ++i) {
        if (!(open >> i & 1u)) continue;
        int a = find(edges_[static_cast<size_t>(i)].first);
        int b = find(edges_[static_cast<size_t>(i)].second);
        if (a != b) {
            parent[static_cast<size_t>(a)] = b;
            --comps;
        }
    }
    return comps == 1;
}

std::uint64_t LabeledGraph::support_of(EdgeMask mask) const {
    require(n_ <= 64, Err::exhaustive_limit_exceeded, "support mask needs n <= 64");
    std::uint64_t s = 0;
    for (int i = 0; i < m(); ++i)
        if (mask >> i & 1u)
            s |= (std::uint64_t{1} << edges_[static_cast<size_t>(i)].first) |
                 (std::uint64_t{1} << edges_[static_cast<size_t>(i)].second);
    return s;
}

std::vector<std::pair<EdgeMask, EdgeMask>> LabeledGraph::disjoint_support_pairs() const {
    require(m() <= kMaxExhaustiveEdges, Err::exhaustive_limit_exceeded,
            "disjoint_support_pairs needs m <= 24");
    std::vector<std::uint64_t> esupp(static_cast<size_t>(m()));
    for (int i = 0; i < m(); ++i)
        esupp[static_cast<size_t>(i)] = (std::uint64_t{1} << edges_[static_cast<size_t>(i)].first) |
                                        (std::uint64_t{1} << edges_[static_cast<size_t>(i)].second);
    std::vector<std::pair<EdgeMask, EdgeMask>> out;
    EdgeMask full = m() == 0 ? 0 : ((EdgeMask{1} << m()) - 1);
    for (EdgeMask s = 1; s <= full && full; ++s) {
        std::uint64_t supp = 0;
        for (int i = 0; i < m(); ++i)
            if (s >> i & 1u) supp |= esupp[static_cast<size_t>(i)];
        EdgeMask outside = 0;
        for (int i = 0; i < m(); ++i)
            if (!(esupp[static_cast<size_t>(i)] & supp)) outside |= EdgeMask{1} << i;
        // nonempty submasks of `outside`, keeping s < t so each pair appears once
        for (EdgeMask t = outside; t; t = (t - 1) & outside)
            if (t > s) out.emplace_back(s, t);
        if (s == full) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void extend_automorphism(const LabeledGraph& g, std::vector<int>& image, std::vector<char>& used,
                         int depth, std::vector<VertexPermutation>& out) {
    int n = g.n();
    if (depth == n) {
        out.push_back(VertexPermutation{image});
        return;
    }
    for (int cand = 0; cand < n; ++cand) {
        if (used[static_cast<size_t>(cand)]) continue;
        bool ok = true;
        for (int prev = 0; prev < depth && ok; ++prev)
            if (g.adjacent(prev, depth) != g.adjacent(image[static_cast<size_t>(prev)], cand)) ok = false;
        if (!ok) continue;
        image[static_cast<size_t>(depth)] = cand;
        used[static_cast<size_t>(cand)] = 1;
        extend_automorphism(g, image, used, depth + 1, out);
        used[static_cast<size_t>(cand)] = 0;
    }
}

} // namespace

std::vector<VertexPermutation> LabeledGraph::automorphisms() const {
    require(n_ <= kMaxAutomorphismVertices, Err::exhaustive_limit_exceeded,
            "automorphisms needs n <= 10");
    std::vector<VertexPermutation> out;
    std::vector<int> image(static_cast<size_t>(n_), -1);
    std::vector<char> used(static_cast<size_t>(n_), 0);
    extend_automorphism(*this, image, used, 0, out);
    return out;
}

EdgeMask LabeledGraph::permute_mask(EdgeMask mask, const VertexPermutation& sigma) const {
    EdgeMask out = 0;
    for (int i = 0; i < m(); ++i) {
        if (!(mask >> i & 1u)) continue;
        auto [u, v] = edges_[static_cast<size_t>(i)];
        int j = edge_index(sigma.map[static_cast<size_t>(u)], sigma.map[static_cast<size_t>(v)]);
        require(j >= 0, Err::internal, "permutation is not an automorphism");
        out |= EdgeMask{1} << j;
    }
    return out;
}

std::vector<int> bootstrap_closure(const LabeledGraph& g, const std::vector<int>& seed) {
    std::vector<char> in(static_cast<size_t>(g.n()), 0);
    std::vector<int> frontier;
    for (int v : seed) {
        require(v >= 0 && v < g.n(), Err::invalid_size, "seed vertex out of range");
        if (!in[static_cast<size_t>(v)]) {
            in[static_cast<size_t>(v)] = 1;
            frontier.push_back(v);
        }
    }
    std::vector<int> inside_degree(static_cast<size_t>(g.n()), 0);
    while (!frontier.empty()) {
        int v = frontier.back();
        frontier.pop_back();
        for (int w : g.adjacency()[static_cast<size_t>(v)]) {
            if (in[static_cast<size_t>(w)]) continue;
            if (++inside_degree[static_cast<size_t>(w)] >= 2) {
                in[static_cast<size_t>(w)] = 1;
                frontier.push_back(w);
            }
        }
    }
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (in[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> shell_partition(const LabeledGraph& g, int v0) {
    require(v0 >= 0 && v0 < g.n(), Err::invalid_size, "root vertex out of range");
    std::vector<int> shell_of(static_cast<size_t>(g.n()), -1);
    std::vector<std::vector<int>> shells;
    shells.push_back({v0});
    shell_of[static_cast<size_t>(v0)] = 0;
    while (true) {
        const auto& prev = shells.back();
        int k = static_cast<int>(shells.size());
        std::vector<int> nbhd;
        for (int v : prev)
            for (int w : g.adjacency()[static_cast<size_t>(v)]) nbhd.push_back(w);
        std::sort(nbhd.begin(), nbhd.end());
        nbhd.erase(std::unique(nbhd.begin(), nbhd.end()), nbhd.end());
        std::vector<int> next;
        for (int v : bootstrap_closure(g, nbhd))
            if (shell_of[static_cast<size_t>(v)] < 0) next.push_back(v);
        if (next.empty()) break;
        for (int v : next) shell_of[static_cast<size_t>(v)] = k;
        // each new vertex may see at most one neighbour one shell below
        for (int v : next) {
            int below = 0;
            for (int w : g.adjacency()[static_cast<size_t>(v)])
                if (shell_of[static_cast<size_t>(w)] == k - 1) ++below;
            require(below <= 1, Err::not_two_percolation_compatible,
                    "vertex " + std::to_string(v + 1) + " has " + std::to_string(below) +
                        " neighbours in the previous shell");
        }
        shells.push_back(std::move(next));
    }
    return shells;
}

} // namespace perco
