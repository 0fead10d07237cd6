#include "perco/crossing.hpp"

#include <array>
#include <map>

namespace perco {

namespace {

// Partition of up to 3 fiber vertices with a "reaches the left face" flag per
// block, packed into one small integer.
struct Partition {
    std::array<int, 3> block{};   // canonical block ids (first occurrence order)
    std::uint32_t flags = 0;      // bit b set: block b reaches the left face

    int encode(int fn) const {
        int code = 0;
        for (int v = 0; v < fn; ++v) code = code * 3 + block[static_cast<size_t>(v)];
        return code * 8 + static_cast<int>(flags);
    }
};

struct UnionFind {
    std::array<int, 8> parent{};
    void init(int n) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int v) {
        while (parent[static_cast<size_t>(v)] != v) v = parent[static_cast<size_t>(v)];
        return v;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

} // namespace

Rat exact_crossing_probability(const VertexBasedMeasure& vbm, int length,
                               const LabeledGraph& fiber) {
    int fn = fiber.n();
    require(fn >= 1 && fn <= kMaxFiberVertices, Err::fiber_too_large, "fiber needs |V| <= 3");
    require(length >= 1 && length <= kMaxCrossingLength, Err::fiber_too_large,
            "length <= 10000");
    if (length == 1)
        require(vbm.graph == fiber, Err::usage_error,
                "vertex-based measure does not live on the fiber");
    else
        require(vbm.graph == LabeledGraph::cartesian_product(LabeledGraph::path(length), fiber),
                Err::usage_error, "vertex-based measure does not live on the expected product");
    vbm.check_shape();
    for (int v = 0; v < vbm.graph.n(); ++v)
        require(vbm.state_count(v) <= kMaxFiberStates, Err::fiber_too_large,
                "state spaces need <= 4 states");

    auto vertex_id = [&](int col, int u) { return col * fn + u; };
    auto state_count = [&](int col, int u) { return vbm.state_count(vertex_id(col, u)); };
    auto state_prob = [&](int col, int u, int s) -> const Rat& {
        return vbm.state_dists[static_cast<size_t>(vertex_id(col, u))][static_cast<size_t>(s)];
    };
    auto vertical_open = [&](int col, int fe, int sa, int sb) {
        auto [a, b] = fiber.edge(fe);
        int e = vbm.graph.edge_index(vertex_id(col, a), vertex_id(col, b));
        return vbm.open(e, sa, sb);
    };
    auto horizontal_open = [&](int col, int u, int sl, int sr) {
        int e = vbm.graph.edge_index(vertex_id(col, u), vertex_id(col + 1, u));
        return vbm.open(e, sl, sr);
    };

    auto enumerate_states = [&](int col, auto&& fn_cb) {
        std::array<int, 3> s{};
        int counts[3];
        for (int u = 0; u < fn; ++u) counts[u] = state_count(col, u);
        while (true) {
            Rat prob(1);
            for (int u = 0; u < fn; ++u) prob *= state_prob(col, u, s[static_cast<size_t>(u)]);
            if (prob != 0) fn_cb(s, prob);
            int u = 0;
            for (; u < fn; ++u) {
                if (++s[static_cast<size_t>(u)] < counts[u]) break;
                s[static_cast<size_t>(u)] = 0;
            }
            if (u == fn) break;
        }
    };

    // key: (encoded previous-column states, encoded partition) -> mass
    std::map<std::pair<int, int>, Rat> layer;
    enumerate_states(0, [&](const std::array<int, 3>& s, const Rat& prob) {
        UnionFind uf;
        uf.init(fn);
        for (int fe = 0; fe < fiber.m(); ++fe) {
            auto [a, b] = fiber.edge(fe);
            if (vertical_open(0, fe, s[static_cast<size_t>(a)], s[static_cast<size_t>(b)]))
                uf.unite(a, b);
        }
        Partition part;
        std::array<int, 3> root_to_block{-1, -1, -1};
        int next = 0;
        for (int v = 0; v < fn; ++v) {
            int r = uf.find(v);
            if (root_to_block[static_cast<size_t>(r)] < 0) root_to_block[static_cast<size_t>(r)] = next++;
            part.block[static_cast<size_t>(v)] = root_to_block[static_cast<size_t>(r)];
        }
        part.flags = (1u << next) - 1; // the whole first column touches the left face
        int scode = 0;
        for (int v = 0; v < fn; ++v) scode = scode * kMaxFiberStates + s[static_cast<size_t>(v)];
        layer[{scode, part.encode(fn)}] += prob;
    });

    for (int col = 0; col + 1 < length; ++col) {
        std::map<std::pair<int, int>, Rat> next_layer;
        for (const auto& [key, mass] : layer) {
            auto [scode, pcode] = key;
            std::array<int, 3> sprev{};
            for (int v = fn - 1; v >= 0; --v) {
                sprev[static_cast<size_t>(v)] = scode % kMaxFiberStates;
                scode /= kMaxFiberStates;
            }
            Partition prev;
            prev.flags = static_cast<std::uint32_t>(pcode % 8);
            int bc = pcode / 8;
            for (int v = fn - 1; v >= 0; --v) {
                prev.block[static_cast<size_t>(v)] = bc % 3;
                bc /= 3;
            }
            int nblocks = 0;
            for (int v = 0; v < fn; ++v) nblocks = std::max(nblocks, prev.block[static_cast<size_t>(v)] + 1);

            enumerate_states(col + 1, [&](const std::array<int, 3>& snew, const Rat& prob) {
                // elements 0..fn-1: new vertices; fn..fn+nblocks-1: old blocks
                UnionFind uf;
                uf.init(fn + nblocks);
                for (int fe = 0; fe < fiber.m(); ++fe) {
                    auto [a, b] = fiber.edge(fe);
                    if (vertical_open(col + 1, fe, snew[static_cast<size_t>(a)], snew[static_cast<size_t>(b)]))
                        uf.unite(a, b);
                }
                for (int u = 0; u < fn; ++u)
                    if (horizontal_open(col, u, sprev[static_cast<size_t>(u)], snew[static_cast<size_t>(u)]))
                        uf.unite(u, fn + prev.block[static_cast<size_t>(u)]);
                Partition part;
                std::array<int, 8> root_to_block;
                root_to_block.fill(-1);
                int next = 0;
                for (int v = 0; v < fn; ++v) {
                    int r = uf.find(v);
                    if (root_to_block[static_cast<size_t>(r)] < 0)
                        root_to_block[static_cast<size_t>(r)] = next++;
                    part.block[static_cast<size_t>(v)] = root_to_block[static_cast<size_t>(r)];
                }
                part.flags = 0;
                for (int b = 0; b < nblocks; ++b) {
                    if (!(prev.flags >> b & 1u)) continue;
                    int r = uf.find(fn + b);
                    if (root_to_block[static_cast<size_t>(r)] >= 0)
                        part.flags |= 1u << root_to_block[static_cast<size_t>(r)];
                }
                if (part.flags == 0) return; // can no longer reach the left face
                int code = 0;
                for (int v = 0; v < fn; ++v) code = code * kMaxFiberStates + snew[static_cast<size_t>(v)];
                next_layer[{code, part.encode(fn)}] += mass * prob;
            });
        }
        layer = std::move(next_layer);
    }

    Rat total(0);
    for (const auto& [key, mass] : layer) total += mass;
    return total;
}

} // namespace perco
