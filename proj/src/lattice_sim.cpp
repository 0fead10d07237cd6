#include "perco/lattice_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "perco/constructions.hpp"
#include "perco/crossing.hpp"
#include "perco/rng.hpp"

namespace perco {

namespace {

struct Grid {
    int radius;
    int side;

    explicit Grid(int r) : radius(r), side(2 * r + 1) {}
    int vertex_count() const { return side * side; }
    int id(int x, int y) const { return (x + radius) * side + (y + radius); }
    bool inside(int x, int y) const {
        return x >= -radius && x <= radius && y >= -radius && y <= radius;
    }
    std::vector<std::array<int, 3>> edge_list() const {
        std::vector<std::array<int, 3>> edges;
        for (int x = -radius; x <= radius; ++x)
            for (int y = -radius; y <= radius; ++y) {
                if (x < radius) edges.push_back({x, y, 0});
                if (y < radius) edges.push_back({x, y, 1});
            }
        return edges;
    }
    std::pair<int, int> endpoints(const std::array<int, 3>& e) const {
        int a = id(e[0], e[1]);
        int b = e[2] == 0 ? id(e[0] + 1, e[1]) : id(e[0], e[1] + 1);
        return {a, b};
    }
};

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

void census(const Grid& grid, const std::vector<char>& open,
            const std::vector<std::array<int, 3>>& edges, std::map<int, long>& hist) {
    DisjointSet ds(grid.vertex_count());
    for (size_t i = 0; i < edges.size(); ++i)
        if (open[i]) {
            auto [a, b] = grid.endpoints(edges[i]);
            ds.unite(a, b);
        }
    std::vector<int> size(static_cast<size_t>(grid.vertex_count()), 0);
    std::vector<char> touched(static_cast<size_t>(grid.vertex_count()), 0);
    for (size_t i = 0; i < edges.size(); ++i)
        if (open[i]) {
            auto [a, b] = grid.endpoints(edges[i]);
            touched[static_cast<size_t>(a)] = touched[static_cast<size_t>(b)] = 1;
        }
    for (int v = 0; v < grid.vertex_count(); ++v)
        if (touched[static_cast<size_t>(v)]) ++size[static_cast<size_t>(ds.find(v))];
    for (int v = 0; v < grid.vertex_count(); ++v)
        if (size[static_cast<size_t>(v)] > 0) ++hist[size[static_cast<size_t>(v)]];
}

void finish_marginal_summary(SampleStats& stats) {
    stats.min_exact_marginal = 1.0;
    stats.marginal_flagged_edges = 0;
    long trials = stats.config.trials;
    for (size_t i = 0; i < stats.edges.size(); ++i) {
        double exact = stats.edge_exact_marginal[i];
        stats.min_exact_marginal = std::min(stats.min_exact_marginal, exact);
        double freq = static_cast<double>(stats.edge_open_count[i]) / static_cast<double>(trials);
        double sigma = std::sqrt(std::max(exact * (1 - exact), 1e-12) / static_cast<double>(trials));
        if (std::abs(freq - exact) > 4 * sigma) ++stats.marginal_flagged_edges;
    }
}

// --- shell construction -------------------------------------------------------

enum ShellState : int { kBlue = 0, kRed = 1, kInward = 2 };

int shell_state(std::uint64_t seed, std::uint64_t trial, int x, int y, double q) {
    int k = std::max(std::abs(x), std::abs(y));
    double r = uniform01(seed, trial, x, y, 7);
    switch (k % 6) {
        case 0: return kBlue;
        case 1: return r < q / 2 ? kRed : kBlue;
        case 2: return r < q ? kRed : kInward;
        case 3: return kRed;
        case 4: return r < q / 2 ? kBlue : kRed;
        default: return r < q ? kBlue : kInward;
    }
}

// State distribution of a shell as (P(Blue), P(Red), P(Inward)).
std::array<double, 3> shell_dist(int k, double q) {
    switch (k % 6) {
        case 0: return {1, 0, 0};
        case 1: return {1 - q / 2, q / 2, 0};
        case 2: return {0, q, 1 - q};
        case 3: return {0, 1, 0};
        case 4: return {q / 2, 1 - q / 2, 0};
        default: return {q, 0, 1 - q};
    }
}

bool shell_edge_open(int state_a, int ka, int state_b, int kb) {
    if (state_a != kInward && state_a == state_b) return true;
    if (kb == ka + 1 && state_b == kInward) return true;
    if (ka == kb + 1 && state_a == kInward) return true;
    return false;
}

double shell_edge_marginal(int ka, int kb, double q) {
    auto da = shell_dist(ka, q), db = shell_dist(kb, q);
    double m = da[0] * db[0] + da[1] * db[1]; // matching colors
    if (kb == ka + 1) m += db[2];
    if (ka == kb + 1) m += da[2];
    return m;
}

} // namespace

SampleStats sample_shell_construction(const WindowConfig& cfg) {
    require(cfg.dimension == 2, Err::invalid_size, "only d = 2 windows are rendered");
    require(cfg.radius >= 7, Err::invalid_size, "shell construction needs R >= 7");
    require(cfg.trials >= 1, Err::invalid_size, "trials >= 1");
    const double q = std::sqrt(3.0) - 1.0;
    Grid grid(cfg.radius);
    SampleStats stats;
    stats.config = cfg;
    stats.edges = grid.edge_list();
    stats.edge_open_count.assign(stats.edges.size(), 0);
    stats.edge_exact_marginal.resize(stats.edges.size());
    auto shell_of = [&](int x, int y) { return std::max(std::abs(x), std::abs(y)); };
    for (size_t i = 0; i < stats.edges.size(); ++i) {
        auto e = stats.edges[i];
        int ka = shell_of(e[0], e[1]);
        int kb = e[2] == 0 ? shell_of(e[0] + 1, e[1]) : shell_of(e[0], e[1] + 1);
        stats.edge_exact_marginal[i] = shell_edge_marginal(ka, kb, q);
    }
    CertificateStat blocking{"no open path from T_k to T_{k+3} (k = 0 mod 3)"};
    CertificateStat colors{"T_0 mod 6 all Blue, T_3 mod 6 all Red"};

    std::vector<int> state(static_cast<size_t>(grid.vertex_count()));
    std::vector<char> open(stats.edges.size());
    for (int trial = 0; trial < cfg.trials; ++trial) {
        for (int x = -cfg.radius; x <= cfg.radius; ++x)
            for (int y = -cfg.radius; y <= cfg.radius; ++y)
                state[static_cast<size_t>(grid.id(x, y))] =
                    shell_state(cfg.seed, static_cast<std::uint64_t>(trial), x, y, q);
        bool colors_ok = true;
        for (int x = -cfg.radius; x <= cfg.radius; ++x)
            for (int y = -cfg.radius; y <= cfg.radius; ++y) {
                int k = shell_of(x, y);
                int st = state[static_cast<size_t>(grid.id(x, y))];
                if (k % 6 == 0 && st != kBlue) colors_ok = false;
                if (k % 6 == 3 && st != kRed) colors_ok = false;
            }
        ++colors.checks;
        if (!colors_ok) ++colors.violations;

        for (size_t i = 0; i < stats.edges.size(); ++i) {
            auto e = stats.edges[i];
            int x2 = e[2] == 0 ? e[0] + 1 : e[0];
            int y2 = e[2] == 0 ? e[1] : e[1] + 1;
            open[i] = shell_edge_open(state[static_cast<size_t>(grid.id(e[0], e[1]))],
                                      shell_of(e[0], e[1]),
                                      state[static_cast<size_t>(grid.id(x2, y2))],
                                      shell_of(x2, y2))
                          ? 1
                          : 0;
            if (open[i]) ++stats.edge_open_count[i];
        }

        DisjointSet ds(grid.vertex_count());
        for (size_t i = 0; i < stats.edges.size(); ++i)
            if (open[i]) {
                auto [a, b] = grid.endpoints(stats.edges[i]);
                ds.unite(a, b);
            }
        bool block_ok = true;
        for (int k = 0; k + 3 <= cfg.radius; k += 3) {
            std::vector<char> from_inner(static_cast<size_t>(grid.vertex_count()), 0);
            for (int x = -cfg.radius; x <= cfg.radius; ++x)
                for (int y = -cfg.radius; y <= cfg.radius; ++y)
                    if (shell_of(x, y) == k) from_inner[static_cast<size_t>(ds.find(grid.id(x, y)))] = 1;
            for (int x = -cfg.radius; x <= cfg.radius && block_ok; ++x)
                for (int y = -cfg.radius; y <= cfg.radius && block_ok; ++y)
                    if (shell_of(x, y) == k + 3 &&
                        from_inner[static_cast<size_t>(ds.find(grid.id(x, y)))])
                        block_ok = false;
        }
        ++blocking.checks;
        if (!block_ok) ++blocking.violations;
        census(grid, open, stats.edges, stats.component_histogram);
    }
    stats.certificates = {blocking, colors};
    finish_marginal_summary(stats);
    return stats;
}

namespace {

enum OnldState : int { kOn = 0, kL = 1, kD = 2 };

int onld_state(std::uint64_t seed, std::uint64_t trial, int x, int y, double q) {
    double r = uniform01(seed, trial, x, y, 11);
    if (r < q) return kOn;
    return r < q + (1 - q) / 2 ? kL : kD;
}

} // namespace

SampleStats sample_onld_construction(const WindowConfig& cfg, double q) {
    require(cfg.dimension == 2, Err::invalid_size, "only d = 2 windows are rendered");
    require(cfg.radius >= 4, Err::invalid_size, "window needs R >= 4");
    require(cfg.trials >= 1, Err::invalid_size, "trials >= 1");
    require(q > 0.25 && q < 1.0, Err::out_of_range, "q in (1/4, 1)");
    Grid grid(cfg.radius);
    SampleStats stats;
    stats.config = cfg;
    stats.edges = grid.edge_list();
    stats.edge_open_count.assign(stats.edges.size(), 0);
    stats.edge_exact_marginal.assign(stats.edges.size(), q * q + (1 - q) / 2);
    CertificateStat orient{"L/D vertices have out-degree exactly 1, On vertices 0"};
    CertificateStat attach{"interior LD-sections attach to at most one On-section"};

    std::vector<int> state(static_cast<size_t>(grid.vertex_count()));
    std::vector<char> open(stats.edges.size());
    std::vector<char> ld_edge(stats.edges.size());
    for (int trial = 0; trial < cfg.trials; ++trial) {
        for (int x = -cfg.radius; x <= cfg.radius; ++x)
            for (int y = -cfg.radius; y <= cfg.radius; ++y)
                state[static_cast<size_t>(grid.id(x, y))] =
                    onld_state(cfg.seed, static_cast<std::uint64_t>(trial), x, y, q);
        auto st = [&](int x, int y) { return state[static_cast<size_t>(grid.id(x, y))]; };
        for (size_t i = 0; i < stats.edges.size(); ++i) {
            auto e = stats.edges[i];
            bool on_on, ld;
            if (e[2] == 0) { // right edge: open left of an L vertex at (x+1, y)
                on_on = st(e[0], e[1]) == kOn && st(e[0] + 1, e[1]) == kOn;
                ld = st(e[0] + 1, e[1]) == kL;
            } else { // up edge: open below a D vertex at (x, y+1)
                on_on = st(e[0], e[1]) == kOn && st(e[0], e[1] + 1) == kOn;
                ld = st(e[0], e[1] + 1) == kD;
            }
            ld_edge[i] = ld ? 1 : 0;
            open[i] = (on_on || ld) ? 1 : 0;
            if (open[i]) ++stats.edge_open_count[i];
        }

        // (a) orientation: orient each L/D-rule edge away from its generator
        // and recount; L/D vertices with their target edge in the window must
        // emit exactly one edge, On vertices none.
        std::vector<int> out_degree(static_cast<size_t>(grid.vertex_count()), 0);
        for (size_t i = 0; i < stats.edges.size(); ++i) {
            if (!ld_edge[i]) continue;
            auto e = stats.edges[i];
            int gen = e[2] == 0 ? grid.id(e[0] + 1, e[1]) : grid.id(e[0], e[1] + 1);
            ++out_degree[static_cast<size_t>(gen)];
        }
        bool orient_ok = true;
        for (int x = -cfg.radius; x <= cfg.radius; ++x)
            for (int y = -cfg.radius; y <= cfg.radius; ++y) {
                int s = st(x, y);
                int deg = out_degree[static_cast<size_t>(grid.id(x, y))];
                if (s == kOn && deg != 0) orient_ok = false;
                if (s == kL && grid.inside(x - 1, y) && deg != 1) orient_ok = false;
                if (s == kD && grid.inside(x, y - 1) && deg != 1) orient_ok = false;
            }
        ++orient.checks;
        if (!orient_ok) ++orient.violations;

        // (b) LD-sections fully inside the window touch at most one On-section.
        DisjointSet on_sections(grid.vertex_count());
        for (size_t i = 0; i < stats.edges.size(); ++i)
            if (open[i] && !ld_edge[i]) {
                auto [a, b] = grid.endpoints(stats.edges[i]);
                on_sections.unite(a, b);
            }
        DisjointSet ld_sections(grid.vertex_count());
        for (size_t i = 0; i < stats.edges.size(); ++i)
            if (ld_edge[i]) {
                auto [a, b] = grid.endpoints(stats.edges[i]);
                ld_sections.unite(a, b);
            }
        std::vector<char> section_touches_boundary(static_cast<size_t>(grid.vertex_count()), 0);
        std::vector<char> in_ld_section(static_cast<size_t>(grid.vertex_count()), 0);
        for (size_t i = 0; i < stats.edges.size(); ++i)
            if (ld_edge[i]) {
                auto [a, b] = grid.endpoints(stats.edges[i]);
                in_ld_section[static_cast<size_t>(a)] = in_ld_section[static_cast<size_t>(b)] = 1;
            }
        for (int x = -cfg.radius; x <= cfg.radius; ++x)
            for (int y = -cfg.radius; y <= cfg.radius; ++y) {
                bool boundary = std::abs(x) == cfg.radius || std::abs(y) == cfg.radius;
                if (boundary && in_ld_section[static_cast<size_t>(grid.id(x, y))])
                    section_touches_boundary[static_cast<size_t>(ld_sections.find(grid.id(x, y)))] = 1;
            }
        std::map<int, int> attached_on_section; // LD-section root -> On-section root seen
        bool attach_ok = true;
        for (int x = -cfg.radius; x <= cfg.radius; ++x)
            for (int y = -cfg.radius; y <= cfg.radius; ++y) {
                int v = grid.id(x, y);
                if (!in_ld_section[static_cast<size_t>(v)] || st(x, y) != kOn) continue;
                int section = ld_sections.find(v);
                if (section_touches_boundary[static_cast<size_t>(section)]) continue;
                int on_root = on_sections.find(v);
                auto [it, inserted] = attached_on_section.emplace(section, on_root);
                if (!inserted && it->second != on_root) attach_ok = false;
            }
        ++attach.checks;
        if (!attach_ok) ++attach.violations;
        census(grid, open, stats.edges, stats.component_histogram);
    }
    stats.certificates = {orient, attach};
    finish_marginal_summary(stats);
    return stats;
}

SampleStats sample_left_down(const WindowConfig& cfg, double t) {
    require(cfg.dimension == 2, Err::invalid_size, "only d = 2 windows are rendered");
    require(cfg.radius >= 4, Err::invalid_size, "window needs R >= 4");
    require(cfg.trials >= 1, Err::invalid_size, "trials >= 1");
    require(t >= 0 && t <= 0.5, Err::out_of_range, "t in [0, 1/2]");
    const double z = 1 - std::sqrt(1 - 2 * t);
    Grid grid(cfg.radius);
    SampleStats stats;
    stats.config = cfg;
    stats.edges = grid.edge_list();
    stats.edge_open_count.assign(stats.edges.size(), 0);
    stats.edge_exact_marginal.assign(stats.edges.size(), t);
    CertificateStat domination{"every left-down open edge is open in the coupled configuration"};

    // z-state of the edge left of (x,y) [dir 0] or below (x,y) [dir 1],
    // indexed by the vertex owning the resolution.
    auto z_open = [&](std::uint64_t trial, int x, int y, int dir) {
        return uniform01(cfg.seed, trial, x, y, dir == 0 ? 21 : 22) < z;
    };
    auto coin_keeps_left = [&](std::uint64_t trial, int x, int y) {
        return uniform01(cfg.seed, trial, x, y, 23) < 0.5;
    };

    std::vector<char> nu_open(stats.edges.size()), xi_open(stats.edges.size());
    for (int trial = 0; trial < cfg.trials; ++trial) {
        auto tr = static_cast<std::uint64_t>(trial);
        bool dominated = true;
        for (size_t i = 0; i < stats.edges.size(); ++i) {
            auto e = stats.edges[i];
            // express the edge as e1/e2 of its resolving vertex
            int vx, vy, dir;
            if (e[2] == 0) { // right edge of (x,y) = left edge of (x+1,y)
                vx = e[0] + 1;
                vy = e[1];
                dir = 0;
            } else { // up edge of (x,y) = down edge of (x,y+1)
                vx = e[0];
                vy = e[1] + 1;
                dir = 1;
            }
            bool left_open = z_open(tr, vx, vy, 0);
            bool down_open = z_open(tr, vx, vy, 1);
            bool self_open = dir == 0 ? left_open : down_open;
            xi_open[i] = self_open ? 1 : 0;
            bool final_open = self_open;
            if (left_open && down_open) {
                bool keep_left = coin_keeps_left(tr, vx, vy);
                final_open = dir == 0 ? keep_left : !keep_left;
            }
            nu_open[i] = final_open ? 1 : 0;
            if (nu_open[i] && !xi_open[i]) dominated = false;
            if (nu_open[i]) ++stats.edge_open_count[i];
        }
        ++domination.checks;
        if (!dominated) ++domination.violations;
        census(grid, nu_open, stats.edges, stats.component_histogram);
    }
    stats.certificates = {domination};
    finish_marginal_summary(stats);
    return stats;
}

LeftDownEquivalence couple_left_down(const Rat& t) {
    require(t >= 0 && 2 * t <= 1, Err::out_of_range, "t in [0, 1/2]");
    LeftDownEquivalence out;
    out.t = t;
    Rat one_minus_2t = 1 - 2 * t;
    Int num = one_minus_2t.get_num(), den = one_minus_2t.get_den();
    require(mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t()),
            Err::usage_error, "exact coupling needs 1-2t to be a rational square");
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rat root(sn, sd);
    root.canonicalize();
    out.z = 1 - root;

    // Vertex formulation: states of (1,0), (0,1), (1,1) decide the four
    // window edges. Edge bits: 0 bottom, 1 left, 2 top, 3 right.
    for (int s10 = 0; s10 < 3; ++s10)
        for (int s01 = 0; s01 < 3; ++s01)
            for (int s11 = 0; s11 < 3; ++s11) {
                auto prob_of = [&](int s) { return s == 0 ? 1 - 2 * t : t; };
                Rat prob = prob_of(s10) * prob_of(s01) * prob_of(s11);
                int mask = 0;
                if (s10 == 1) mask |= 1; // L at (1,0): bottom edge open
                if (s01 == 2) mask |= 2; // D at (0,1): left edge open
                if (s11 == 1) mask |= 4; // L at (1,1): top edge open
                if (s11 == 2) mask |= 8; // D at (1,1): right edge open
                out.vertex_dist[static_cast<size_t>(mask)] += prob;
            }

    // Coupled formulation: six latent edges (four window edges plus the down
    // edge of (1,0) and the left edge of (0,1)) and three fair coins.
    const Rat& z = out.z;
    for (int bits = 0; bits < 64; ++bits) {
        bool bottom = bits & 1, leftv = bits & 2, top = bits & 4, right = bits & 8;
        bool down10 = bits & 16, left01 = bits & 32;
        Rat pe(1);
        for (int b = 0; b < 6; ++b) pe *= (bits >> b & 1) ? z : Rat(1 - z);
        for (int coins = 0; coins < 8; ++coins) {
            bool keep_left_10 = coins & 1, keep_left_01 = coins & 2, keep_left_11 = coins & 4;
            Rat prob = pe / 8;
            // resolve at (1,0): e1 = bottom, e2 = down10
            bool fb = bottom, fl = leftv, ft = top, fr = right;
            if (bottom && down10) fb = keep_left_10;
            // resolve at (0,1): e1 = left01, e2 = leftv
            if (left01 && leftv) fl = !keep_left_01;
            // resolve at (1,1): e1 = top, e2 = right
            if (top && right) {
                ft = keep_left_11;
                fr = !keep_left_11;
            }
            int mask = (fb ? 1 : 0) | (fl ? 2 : 0) | (ft ? 4 : 0) | (fr ? 8 : 0);
            out.coupled_dist[static_cast<size_t>(mask)] += prob;
        }
    }
    out.equal = out.vertex_dist == out.coupled_dist;
    return out;
}

LadderWindowReport ladder_window_check(const Rat& p, std::uint64_t seed, int trials) {
    LadderWindowReport rep;
    auto vbm = ladder_vbm(p);
    int N = vbm.graph.n() / 2;
    rep.block_columns = N;
    rep.component_bound = 4 * N - 6;

    auto deterministic = [&](int vertex, int state_val) {
        return vbm.state_dists[static_cast<size_t>(vertex)][static_cast<size_t>(state_val)] == 1;
    };
    rep.rung_deterministic = deterministic(0, 2) && deterministic(1, 2) &&
                             deterministic(2 * (N - 1), 0) && deterministic(2 * N - 1, 0);

    rep.block_crossing = exact_crossing_probability(vbm, N, LabeledGraph::path(2));
    rep.bound_certified = rep.rung_deterministic && rep.block_crossing == 0;

    // Optional sampling over two tiled blocks (columns 1..2N-1).
    if (trials > 0) {
        int cols = 2 * N - 1;
        auto sample_state = [&](std::uint64_t trial, int block, int col, int row) {
            // col is 0-based within the block
            int vertex = 2 * col + row;
            const auto& dist = vbm.state_dists[static_cast<size_t>(vertex)];
            double r = uniform01(seed, trial, block * 100000 + col, row, 31);
            double acc = 0;
            for (int s = 0; s < 3; ++s) {
                acc += rat_double(dist[static_cast<size_t>(s)]);
                if (r < acc) return s;
            }
            return 2;
        };
        for (int trial = 0; trial < trials; ++trial) {
            auto tr = static_cast<std::uint64_t>(trial);
            // states per block copy
            std::vector<std::array<int, 2>> s0(static_cast<size_t>(N)), s1(static_cast<size_t>(N));
            for (int c = 0; c < N; ++c)
                for (int r = 0; r < 2; ++r) {
                    s0[static_cast<size_t>(c)][static_cast<size_t>(r)] = sample_state(tr, 0, c, r);
                    s1[static_cast<size_t>(c)][static_cast<size_t>(r)] = sample_state(tr, 1, c, r);
                }
            DisjointSet ds(2 * cols);
            auto vid = [&](int c, int r) { return 2 * c + r; };
            auto horiz_open = [](int a, int b) { return a <= b; };
            auto vert_open = [](int a, int b) { return a == b || a == 1 || b == 1; };
            // block 0 spans window columns 0..N-1, block 1 spans N-1..2N-2
            for (int c = 0; c + 1 < N; ++c)
                for (int r = 0; r < 2; ++r) {
                    if (horiz_open(s0[static_cast<size_t>(c)][static_cast<size_t>(r)],
                                   s0[static_cast<size_t>(c + 1)][static_cast<size_t>(r)]))
                        ds.unite(vid(c, r), vid(c + 1, r));
                    if (horiz_open(s1[static_cast<size_t>(c)][static_cast<size_t>(r)],
                                   s1[static_cast<size_t>(c + 1)][static_cast<size_t>(r)]))
                        ds.unite(vid(N - 1 + c, r), vid(N + c, r));
                }
            for (int c = 0; c < N; ++c) {
                if (vert_open(s0[static_cast<size_t>(c)][0], s0[static_cast<size_t>(c)][1]))
                    ds.unite(vid(c, 0), vid(c, 1));
                if (vert_open(s1[static_cast<size_t>(c)][0], s1[static_cast<size_t>(c)][1]))
                    ds.unite(vid(N - 1 + c, 0), vid(N - 1 + c, 1));
            }
            std::vector<int> size(static_cast<size_t>(2 * cols), 0);
            for (int v = 0; v < 2 * cols; ++v) ++size[static_cast<size_t>(ds.find(v))];
            int biggest = 0;
            for (int v = 0; v < 2 * cols; ++v) biggest = std::max(biggest, size[static_cast<size_t>(v)]);
            rep.max_component_seen = std::max(rep.max_component_seen, biggest);
            if (biggest > rep.component_bound) ++rep.bound_violations;
            ++rep.samples;
        }
    }
    return rep;
}

} // namespace perco
