#include "perco/constructions.hpp"

#include <algorithm>
#include <cmath>

namespace perco {

namespace {

template <class T>
std::vector<T> path_gn_impl(int N, const T& p) {
    require(N >= 0, Err::invalid_size, "N >= 0");
    std::vector<T> g(static_cast<size_t>(N) + 1);
    g[0] = T(1);
    if (N >= 1) g[1] = T(1);
    if (N >= 2) g[2] = p;
    T q = T(1) - p;
    for (int k = 3; k <= N; ++k)
        g[static_cast<size_t>(k)] = g[static_cast<size_t>(k - 1)] - q * g[static_cast<size_t>(k - 2)];
    return g;
}

template <class T>
std::vector<T> complete_sn_impl(int N, const T& p) {
    require(N >= 0, Err::invalid_size, "N >= 0");
    std::vector<T> s(static_cast<size_t>(N) + 1);
    s[0] = T(2);
    if (N >= 1) s[1] = T(1);
    T x = (T(1) - p) / T(2);
    for (int k = 2; k <= N; ++k)
        s[static_cast<size_t>(k)] = s[static_cast<size_t>(k - 1)] - x * s[static_cast<size_t>(k - 2)];
    return s;
}

} // namespace

std::vector<Rat> path_gn_values(int N, const Rat& p) { return path_gn_impl(N, p); }
std::vector<double> path_gn_values(int N, double p) { return path_gn_impl(N, p); }
std::vector<Rat> complete_sn_values(int N, const Rat& p) { return complete_sn_impl(N, p); }
std::vector<double> complete_sn_values(int N, double p) { return complete_sn_impl(N, p); }

long double path_threshold(int n) {
    require(n >= 2, Err::invalid_size, "path threshold needs n >= 2");
    long double t = std::tan(static_cast<long double>(M_PI) / (n + 1));
    return (3.0L - t * t) / 4.0L;
}

long double complete_threshold(int n) {
    require(n >= 2, Err::invalid_size, "complete threshold needs n >= 2");
    long double t = std::tan(static_cast<long double>(M_PI) / (2 * n));
    return (1.0L - t * t) / 2.0L;
}

void require_at_least(const Rat& p, long double threshold, const std::string& what) {
    const long double band = 1e-12L;
    long double pv = static_cast<long double>(rat_double(p));
    if (pv < threshold - band)
        fail(Err::below_validity_threshold, what + ": p below validity threshold");
    if (pv < threshold + band)
        fail(Err::below_validity_threshold,
             what + ": p within the 1e-12 guard band of the threshold");
}

namespace {

void check_unit_interval(const Rat& p, const char* what) {
    require(p >= 0 && p <= 1, Err::out_of_piece, std::string(what) + ": p outside [0,1]");
}

// Weight of a path configuration: (1-p)^c over the closed positions times the
// g-value of each maximal open run; zero whenever two closed edges are adjacent.
template <class T>
std::vector<T> path_weights(int n, const T& p, const std::vector<T>& g) {
    int m = n - 1;
    std::vector<T> w(size_t{1} << m, T(0));
    T q = T(1) - p;
    for (EdgeMask h = 0; h < (EdgeMask{1} << m); ++h) {
        EdgeMask closed = ~h & ((EdgeMask{1} << m) - 1);
        if (closed & (closed << 1)) continue; // adjacent closed edges: impossible
        T weight = T(1);
        int prev = 0; // vertex position after the previous closed edge pair
        bool first = true;
        for (int j = 1; j <= m; ++j) {
            if (!(closed >> (j - 1) & 1u)) continue;
            int seg = first ? j - 1 : j - prev - 2;
            weight *= q * g[static_cast<size_t>(seg)];
            prev = j;
            first = false;
        }
        int tail = first ? n : n - prev - 1;
        weight *= g[static_cast<size_t>(tail)];
        w[h] = weight;
    }
    return w;
}

int smaller_side(std::uint32_t a, int n) {
    int c = 0;
    for (int v = 0; v < n; ++v) c += (a >> v) & 1u;
    return std::min(c, n - c);
}

// Weights of split graphs H_A (a clique on A plus a clique on its complement):
// ((1-p)/2)^j * s_{n-2j} with j the smaller side.
template <class T>
std::vector<T> complete_weights(const LabeledGraph& kn, const T& p, const std::vector<T>& s) {
    int n = kn.n();
    std::vector<T> w(size_t{1} << kn.m(), T(0));
    T x = (T(1) - p) / T(2);
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << (n - 1)); ++a) {
        std::uint32_t setA = (a << 1) | 1u; // vertex 0 always on the A side
        EdgeMask mask = 0;
        for (int e = 0; e < kn.m(); ++e) {
            auto [u, v] = kn.edge(e);
            bool au = setA >> u & 1u, av = setA >> v & 1u;
            if (au == av) mask |= EdgeMask{1} << e;
        }
        int j = smaller_side(setA, n);
        T weight = s[static_cast<size_t>(n - 2 * j)];
        for (int i = 0; i < j; ++i) weight *= x;
        w[mask] += weight;
    }
    return w;
}

} // namespace

Measure path_measure(int n, const Rat& p) {
    require(n >= 2, Err::invalid_size, "path needs n >= 2");
    check_unit_interval(p, "path_measure");
    if (n >= 3) require_at_least(p, path_threshold(n), "path_measure");
    auto g = path_gn_values(n, p);
    return Measure::exact(LabeledGraph::path(n), path_weights(n, p, g));
}

Measure path_measure_approx(int n, double p) {
    require(n >= 2, Err::invalid_size, "path needs n >= 2");
    if (n >= 3 && static_cast<long double>(p) < path_threshold(n) - 1e-9L)
        fail(Err::below_validity_threshold, "path_measure_approx: p below threshold");
    auto g = path_gn_values(n, p);
    return Measure::floating(LabeledGraph::path(n), path_weights(n, p, g), 1e-9);
}

Measure complete_measure(int n, const Rat& p) {
    require(n >= 2, Err::invalid_size, "complete graph needs n >= 2");
    check_unit_interval(p, "complete_measure");
    if (n >= 3) require_at_least(p, complete_threshold(n), "complete_measure");
    auto kn = LabeledGraph::complete(n);
    auto s = complete_sn_values(n, p);
    return Measure::exact(kn, complete_weights(kn, p, s));
}

Measure complete_measure_approx(int n, double p) {
    require(n >= 2, Err::invalid_size, "complete graph needs n >= 2");
    if (n >= 3 && static_cast<long double>(p) < complete_threshold(n) - 1e-9L)
        fail(Err::below_validity_threshold, "complete_measure_approx: p below threshold");
    auto kn = LabeledGraph::complete(n);
    auto s = complete_sn_values(n, p);
    return Measure::floating(kn, complete_weights(kn, p, s), 1e-9);
}

namespace {

// Masks of C4/C5 configurations by orbit, described by what is open.
std::vector<EdgeMask> cycle_masks_with_edges(const LabeledGraph& g, int count, bool adjacent) {
    std::vector<EdgeMask> out;
    for (EdgeMask h = 0; h < (EdgeMask{1} << g.m()); ++h) {
        int bits = __builtin_popcount(h);
        if (bits != count) continue;
        if (count == 2) {
            int e1 = __builtin_ctz(h);
            int e2 = __builtin_ctz(h & (h - 1));
            auto [a, b] = g.edge(e1);
            auto [c, d] = g.edge(e2);
            bool adj = a == c || a == d || b == c || b == d;
            if (adj != adjacent) continue;
        }
        out.push_back(h);
    }
    return out;
}

std::vector<EdgeMask> cycle_masks_missing(const LabeledGraph& g, int missing, bool adjacent) {
    EdgeMask full = (EdgeMask{1} << g.m()) - 1;
    auto base = cycle_masks_with_edges(g, missing, adjacent);
    std::vector<EdgeMask> out;
    out.reserve(base.size());
    for (EdgeMask h : base) out.push_back(full & ~h);
    return out;
}

} // namespace

Measure c4_min_measure(const Rat& p) {
    check_unit_interval(p, "c4_min_measure");
    auto g = LabeledGraph::cycle(4);
    std::vector<Rat> w(16, Rat(0));
    EdgeMask full = 15;
    auto adj2 = cycle_masks_with_edges(g, 2, true);    // 4 configurations
    auto non2 = cycle_masks_with_edges(g, 2, false);   // 2 configurations
    if (p >= Rat(1, 2)) {
        w[full] = 2 * p - 1;
        for (EdgeMask h : adj2) w[h] = p * (1 - p) / 2;
        for (EdgeMask h : non2) w[h] = (1 - p) * (1 - p);
    } else {
        w[0] = 1 - 2 * p;
        for (EdgeMask h : adj2) w[h] = p * (1 - p) / 2;
        for (EdgeMask h : non2) w[h] = p * p;
    }
    return Measure::exact(g, std::move(w));
}

Measure c5_min_measure(const Rat& p) {
    check_unit_interval(p, "c5_min_measure");
    auto g = LabeledGraph::cycle(5);
    std::vector<Rat> w(32, Rat(0));
    EdgeMask full = 31;
    auto miss_adj = cycle_masks_missing(g, 2, true);    // 5 configurations
    auto miss_non = cycle_masks_missing(g, 2, false);   // 5 configurations
    bool upper = 3 * p * p >= 1; // p >= sqrt(3)/3, decided exactly
    if (upper) {
        Rat den = 3 * p - 1;
        w[full] = p * (3 * p * p - 1) / den;
        for (EdgeMask h : miss_adj) w[h] = p * (1 - p) * (2 * p - 1) / den;
        for (EdgeMask h : miss_non) w[h] = p * (1 - p) * (1 - p) / den;
        w[0] = (2 * p - 1) * (1 - p) * (1 - p) / den;
    } else {
        Rat den = 3 * p + 2;
        auto adj2 = cycle_masks_with_edges(g, 2, true); // 5 configurations
        w[0] = (5 * p * p * p - 5 * p * p - 2 * p + 2) / den;
        for (EdgeMask h : adj2) w[h] = p * (1 - 3 * p * p) / den;
        for (EdgeMask h : miss_adj) w[h] = p * p * p / den;
        for (EdgeMask h : miss_non) w[h] = p * p * (1 + p) / den;
    }
    return Measure::exact(g, std::move(w));
}

Measure c4_max_measure(const Rat& p) {
    check_unit_interval(p, "c4_max_measure");
    auto g = LabeledGraph::cycle(4);
    std::vector<Rat> w(16, Rat(0));
    EdgeMask full = 15;
    if (p >= Rat(2, 3)) {
        w[full] = p * (3 * p - 2);
        for (EdgeMask h : cycle_masks_missing(g, 1, true)) w[h] = p * (1 - p);
        w[0] = 1 - p * (2 - p);
    } else {
        for (EdgeMask h : cycle_masks_missing(g, 1, true)) w[h] = p * p / 2;
        for (EdgeMask h : cycle_masks_with_edges(g, 1, true)) w[h] = p * (2 - 3 * p) / 2;
        w[0] = 1 - 4 * p * (1 - p);
    }
    return Measure::exact(g, std::move(w));
}

Measure c5_max_measure(const Rat& p) {
    check_unit_interval(p, "c5_max_measure");
    auto g = LabeledGraph::cycle(5);
    std::vector<Rat> w(32, Rat(0));
    EdgeMask full = 31;
    auto four = cycle_masks_missing(g, 1, true);      // 5 configurations
    auto adj2 = cycle_masks_with_edges(g, 2, true);   // 5
    auto one = cycle_masks_with_edges(g, 1, true);    // 5
    auto miss_adj = cycle_masks_missing(g, 2, true);  // 5
    if (p >= Rat(3, 5)) {
        Rat den = 5 - 3 * p;
        w[full] = p * (5 * p - 3) / den;
        for (EdgeMask h : four) w[h] = p * (1 - p * p) / den;
        for (EdgeMask h : adj2) w[h] = (3 * p * p * p - 7 * p * p + 5 * p - 1) / den;
        for (EdgeMask h : one) w[h] = 2 * (1 - p) * (1 - p) * (1 - p) / den;
    } else if (p >= Rat(1, 2)) {
        for (EdgeMask h : four) w[h] = p * p / 3;
        for (EdgeMask h : adj2) w[h] = p * (2 - 3 * p) / 3;
        for (EdgeMask h : one) w[h] = p * (2 * p - 1) / 3;
        w[0] = (3 - 5 * p) / 3;
    } else {
        Rat den = p + 4;
        for (EdgeMask h : four) w[h] = p * p * (p + 1) / den;
        for (EdgeMask h : miss_adj) w[h] = p * p * (1 - 2 * p) / den;
        for (EdgeMask h : adj2) w[h] = p * (p * p - 3 * p + 2) / den;
        w[0] = (5 * p * p - 9 * p + 4) / den;
    }
    return Measure::exact(g, std::move(w));
}

Measure pn_max_measure(int n, const Rat& p) {
    require(n >= 2, Err::invalid_size, "path needs n >= 2");
    check_unit_interval(p, "pn_max_measure");
    VertexBasedMeasure vbm;
    vbm.graph = LabeledGraph::path(n);
    for (int v = 0; v < n; ++v) {
        bool even_label = (v + 1) % 2 == 0;
        if (even_label)
            vbm.state_dists.push_back({1 - p, p}); // Off, On
        else
            vbm.state_dists.push_back({Rat(1)});
    }
    for (int e = 0; e < vbm.graph.m(); ++e) {
        auto [u, v] = vbm.graph.edge(e);
        int cu = vbm.state_count(u), cv = vbm.state_count(v);
        std::vector<char> table(static_cast<size_t>(cu) * cv, 0);
        for (int su = 0; su < cu; ++su)
            for (int sv = 0; sv < cv; ++sv) {
                bool on = (cu == 2 && su == 1) || (cv == 2 && sv == 1);
                table[static_cast<size_t>(su * cv + sv)] = on ? 1 : 0;
            }
        vbm.edge_open.push_back(std::move(table));
    }
    return from_vertex_based(vbm);
}

Measure kn_max_measure(int n, const Rat& p) {
    Measure base = complete_measure(n, 1 - p);
    EdgeMask full = (EdgeMask{1} << base.graph().m()) - 1;
    std::vector<Rat> w(base.size(), Rat(0));
    for (size_t h = 0; h < base.size(); ++h)
        w[full & ~static_cast<EdgeMask>(h)] = base.weights_exact()[h];
    return Measure::exact(base.graph(), std::move(w));
}

Measure kn_k_indep_measure(int n, const Rat& p) {
    require(n >= 2, Err::invalid_size, "complete graph needs n >= 2");
    check_unit_interval(p, "kn_k_indep_measure");
    auto kn = LabeledGraph::complete(n);
    Rat x = (1 - p) / 2;
    Rat total = std::min(Rat(n * x), Rat(1));
    std::vector<Rat> w(size_t{1} << kn.m(), Rat(0));
    EdgeMask full = (EdgeMask{1} << kn.m()) - 1;
    for (int i = 0; i < n; ++i) {
        EdgeMask star = 0;
        for (int e = 0; e < kn.m(); ++e) {
            auto [u, v] = kn.edge(e);
            if (u == i || v == i) star |= EdgeMask{1} << e;
        }
        w[full & ~star] += total / n;
    }
    w[full] += 1 - total;
    return Measure::exact(kn, std::move(w));
}

namespace {

// Balister-Bollobas state probabilities: q_1 = 0 and
// q_k = min((1-p)/(1-q_{k-1}), 1). Once q hits 1, it stays at 1.
std::vector<Rat> bb_path_state_probs(int n, const Rat& p) {
    std::vector<Rat> q(static_cast<size_t>(n) + 1, Rat(0));
    for (int k = 2; k <= n; ++k) {
        const Rat& prev = q[static_cast<size_t>(k - 1)];
        if (prev == 1 || 1 - p >= 1 - prev)
            q[static_cast<size_t>(k)] = 1;
        else
            q[static_cast<size_t>(k)] = (1 - p) / (1 - prev);
    }
    return q;
}

} // namespace

VertexBasedMeasure path_vbm(int n, const Rat& p) {
    require(n >= 2, Err::invalid_size, "path needs n >= 2");
    check_unit_interval(p, "path_vbm");
    auto q = bb_path_state_probs(n, p);
    VertexBasedMeasure vbm;
    vbm.graph = LabeledGraph::path(n);
    for (int v = 0; v < n; ++v)
        vbm.state_dists.push_back({q[static_cast<size_t>(v + 1)], 1 - q[static_cast<size_t>(v + 1)]});
    for (int e = 0; e < vbm.graph.m(); ++e) {
        // open iff state(left) <= state(right)
        vbm.edge_open.push_back({1, 1, 0, 1});
    }
    return vbm;
}

void LadderSequences::check_invariants() const {
    size_t N = p.size();
    require(r.size() == N && s.size() == N && N >= 1, Err::internal, "sequence lengths");
    for (size_t i = 0; i < N; ++i) {
        require(p[i] >= 0 && p[i] <= 1, Err::internal, "p_n outside [0,1]");
        require(r[i] >= 0 && r[i] <= 1, Err::internal, "r_n outside [0,1]");
        require(s[i] >= 0 && s[i] <= 1 - r[i], Err::internal, "s_n outside [0,1-r_n]");
        if (i + 1 < N) {
            require(p[i + 1] <= p[i], Err::internal, "p_n not nonincreasing");
            require(r[i + 1] <= r[i], Err::internal, "r_n not nonincreasing");
            require(r[i + 1] + s[i + 1] <= r[i] + s[i], Err::internal, "r_n+s_n not nonincreasing");
        }
    }
}

LadderSequences ladder_sequences(const Rat& p, int N) {
    require(p > Rat(1, 2) && p < Rat(2, 3), Err::out_of_range, "ladder needs p in (1/2, 2/3)");
    require(N >= 1, Err::invalid_size, "N >= 1");
    LadderSequences seq;
    seq.p_input = p;
    seq.p.assign(1, Rat(1));
    seq.r.assign(1, Rat(1));
    seq.s.assign(1, Rat(0));
    for (int n = 1; n < N; ++n) {
        const Rat& pn = seq.p.back();
        const Rat& rn = seq.r.back();
        const Rat& sn = seq.s.back();
        Rat rs = rn + sn;
        Rat pnext = rs >= 1 - p ? Rat(1 - (1 - p) / rs) : Rat(0);
        Rat rnext = pn >= 1 - p ? Rat(1 - (1 - p) / pn) : Rat(0);
        Rat snext(0);
        if (pnext > 0) snext = std::max(Rat(1 - 2 * rnext + (rnext - (1 - p)) / pnext), Rat(0));
        seq.p.push_back(pnext);
        seq.r.push_back(rnext);
        seq.s.push_back(snext);
    }
    return seq;
}

int ladder_length(const Rat& p) {
    require(p > Rat(1, 2) && p < Rat(2, 3), Err::out_of_range, "ladder needs p in (1/2, 2/3)");
    Rat eps = Rat(2, 3) - p;
    Rat ratio = 2 / eps;
    Int num = ratio.get_num(), den = ratio.get_den();
    Int quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int n = rem == 0 ? quot : Int(quot + 1);
    return static_cast<int>(n.get_si());
}

VertexBasedMeasure ladder_vbm(const Rat& p) {
    int N = ladder_length(p);
    auto seq = ladder_sequences(p, N);
    require(seq.p.back() == 0 && seq.r.back() == 0 && seq.s.back() == 0, Err::internal,
            "sequences did not vanish by column N");
    VertexBasedMeasure vbm;
    vbm.graph = LabeledGraph::cartesian_product(LabeledGraph::path(N), LabeledGraph::path(2));
    vbm.state_dists.assign(static_cast<size_t>(2 * N), {});
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < 2; ++y) {
            size_t id = static_cast<size_t>(2 * x + y);
            const Rat& pn = seq.p[static_cast<size_t>(x)];
            const Rat& rn = seq.r[static_cast<size_t>(x)];
            const Rat& sn = seq.s[static_cast<size_t>(x)];
            if ((x + y) % 2 == 0)
                vbm.state_dists[id] = {1 - pn, Rat(0), pn};
            else
                vbm.state_dists[id] = {1 - rn - sn, sn, rn};
        }
    for (int e = 0; e < vbm.graph.m(); ++e) {
        auto [u, v] = vbm.graph.edge(e);
        bool vertical = v == u + 1 && u % 2 == 0;
        std::vector<char> table(9, 0);
        for (int su = 0; su < 3; ++su)
            for (int sv = 0; sv < 3; ++sv) {
                bool open = vertical ? (su == sv || su == 1 || sv == 1) : su <= sv;
                table[static_cast<size_t>(su * 3 + sv)] = open ? 1 : 0;
            }
        vbm.edge_open.push_back(std::move(table));
    }
    // Claim on edge marginals, verified exactly.
    for (int e = 0; e < vbm.graph.m(); ++e)
        require(vbm_edge_marginal(vbm, e) >= p, Err::internal,
                "ladder edge marginal below p on edge " + std::to_string(e));
    return vbm;
}

int line_tiling_block_length(const Rat& p) {
    require(p >= 0, Err::out_of_range, "p in [0,1]");
    require(p < Rat(3, 4), Err::above_threshold, "line tiling needs p < 3/4");
    // smallest N with g_N(p) < 0
    Rat gm2(1), gm1(1); // g_0, g_1
    Rat q = 1 - p;
    for (int k = 2;; ++k) {
        Rat g = (k == 2) ? p : Rat(gm1 - q * gm2);
        if (g < 0) return k;
        gm2 = gm1;
        gm1 = g;
    }
}

VertexBasedMeasure line_tiling_vbm(const Rat& p, int window_length) {
    require(window_length >= 2, Err::invalid_size, "window needs >= 2 vertices");
    int N = line_tiling_block_length(p);
    auto q = bb_path_state_probs(N, p);
    VertexBasedMeasure vbm;
    vbm.graph = LabeledGraph::path(window_length);
    for (int v = 0; v < window_length; ++v) {
        int pos = v % (N - 1);            // 0-based position within its block
        bool boundary = pos == 0;         // block endpoints carry no randomness
        if (boundary)
            vbm.state_dists.push_back({Rat(1)});
        else
            vbm.state_dists.push_back(
                {q[static_cast<size_t>(pos + 1)], 1 - q[static_cast<size_t>(pos + 1)]});
    }
    for (int e = 0; e < vbm.graph.m(); ++e) {
        auto [u, v] = vbm.graph.edge(e);
        // A shared endpoint is deterministic in both blocks it belongs to:
        // q_N = 1 makes it state 0 as a block end, q_1 = 0 makes it state 1
        // as a block start. The edge lives in one block only, so the table
        // substitutes the value the edge's own block sees.
        bool left_is_block_start = u % (N - 1) == 0;
        bool right_is_block_end = v % (N - 1) == 0;
        int cu = vbm.state_count(u), cv = vbm.state_count(v);
        std::vector<char> table(static_cast<size_t>(cu) * cv, 0);
        for (int su = 0; su < cu; ++su)
            for (int sv = 0; sv < cv; ++sv) {
                int left = left_is_block_start ? 1 : su;
                int right = right_is_block_end ? 0 : sv;
                table[static_cast<size_t>(su * cv + sv)] = left <= right ? 1 : 0;
            }
        vbm.edge_open.push_back(std::move(table));
    }
    return vbm;
}

} // namespace perco
