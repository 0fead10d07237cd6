#include "perco/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace perco {

namespace {

size_t checked_size(const LabeledGraph& g) {
    require(g.m() <= kMaxExhaustiveEdges, Err::exhaustive_limit_exceeded,
            "explicit measures need m <= 24");
    return size_t{1} << g.m();
}

template <class T>
T upward_sum(const std::vector<T>& w, EdgeMask s) {
    T acc{};
    for (size_t h = 0; h < w.size(); ++h)
        if ((static_cast<EdgeMask>(h) & s) == s) acc += w[h];
    return acc;
}

} // namespace

Measure Measure::exact(LabeledGraph g, std::vector<Rat> weights) {
    Measure mu(std::move(g), Mode::exact);
    require(weights.size() == checked_size(mu.g_), Err::invalid_size,
            "weight vector must have 2^m entries");
    mu.wq_ = std::move(weights);
    return mu;
}

Measure Measure::floating(LabeledGraph g, std::vector<double> weights, double tolerance) {
    Measure mu(std::move(g), Mode::floating);
    require(weights.size() == checked_size(mu.g_), Err::invalid_size,
            "weight vector must have 2^m entries");
    require(tolerance >= 0, Err::usage_error, "tolerance must be >= 0");
    double mass = 0;
    for (double& w : weights) {
        if (w < 0) {
            require(w >= -tolerance, Err::negative_weight,
                    "weight " + std::to_string(w) + " below -tolerance");
            w = 0;
        }
        mass += w;
    }
    require(std::abs(mass - 1.0) <= tolerance, Err::mass_mismatch,
            "total mass " + std::to_string(mass));
    if (mass != 0)
        for (double& w : weights) w /= mass;
    mu.wd_ = std::move(weights);
    mu.tol_ = tolerance;
    return mu;
}

const std::vector<Rat>& Measure::weights_exact() const {
    require(mode_ == Mode::exact, Err::usage_error, "measure is not in exact mode");
    return wq_;
}

const std::vector<double>& Measure::weights_floating() const {
    require(mode_ == Mode::floating, Err::usage_error, "measure is not in floating mode");
    return wd_;
}

double Measure::weight_as_double(EdgeMask h) const {
    return mode_ == Mode::exact ? rat_double(wq_[h]) : wd_[h];
}

MarginalReport validate(const Measure& mu) {
    MarginalReport rep;
    const auto& g = mu.graph();
    if (mu.mode() == Mode::exact) {
        Rat mass = 0;
        for (size_t h = 0; h < mu.size(); ++h) {
            const Rat& w = mu.weights_exact()[h];
            require(w >= 0, Err::negative_weight, "weight of mask " + std::to_string(h));
            mass += w;
        }
        require(mass == 1, Err::mass_mismatch, "total mass " + rat_str(mass));
        for (int e = 0; e < g.m(); ++e)
            rep.exact.push_back(upward_sum(mu.weights_exact(), EdgeMask{1} << e));
    } else {
        double mass = 0;
        for (size_t h = 0; h < mu.size(); ++h) {
            double w = mu.weights_floating()[h];
            require(w >= 0, Err::negative_weight, "weight of mask " + std::to_string(h));
            mass += w;
        }
        require(std::abs(mass - 1.0) <= std::max(mu.tolerance(), 1e-13), Err::mass_mismatch,
                "total mass " + std::to_string(mass));
        for (int e = 0; e < g.m(); ++e)
            rep.approx.push_back(upward_sum(mu.weights_floating(), EdgeMask{1} << e));
    }
    return rep;
}

Rat upward_marginal(const Measure& mu, EdgeMask s) {
    return upward_sum(mu.weights_exact(), s);
}

double upward_marginal_approx(const Measure& mu, EdgeMask s) {
    if (mu.mode() == Mode::exact) return rat_double(upward_sum(mu.weights_exact(), s));
    return upward_sum(mu.weights_floating(), s);
}

Rat edge_probability(const Measure& mu) {
    const auto& g = mu.graph();
    require(g.m() >= 1, Err::invalid_size, "graph has no edges");
    Rat best = 2;
    for (int e = 0; e < g.m(); ++e) best = std::min(best, upward_marginal(mu, EdgeMask{1} << e));
    return best;
}

double edge_probability_approx(const Measure& mu) {
    const auto& g = mu.graph();
    require(g.m() >= 1, Err::invalid_size, "graph has no edges");
    double best = 2;
    for (int e = 0; e < g.m(); ++e)
        best = std::min(best, upward_marginal_approx(mu, EdgeMask{1} << e));
    return best;
}

namespace {

// Indices of configurations with nonzero weight; pair checks scan only these.
template <class T>
std::vector<EdgeMask> support_list(const std::vector<T>& w) {
    std::vector<EdgeMask> out;
    for (size_t h = 0; h < w.size(); ++h)
        if (!(w[h] == T{})) out.push_back(static_cast<EdgeMask>(h));
    return out;
}

template <class T>
struct PairCheckOutcome {
    T worst{};
    std::optional<std::pair<EdgeMask, EdgeMask>> witness;
};

template <class T>
PairCheckOutcome<T> product_law_check(const std::vector<T>& w,
                                      const std::vector<std::pair<EdgeMask, EdgeMask>>& pairs) {
    auto supp = support_list(w);
    PairCheckOutcome<T> out;
    for (auto [s, t] : pairs) {
        EdgeMask st = s | t;
        T ps{}, pt{}, pst{};
        for (EdgeMask h : supp) {
            bool in_s = (h & s) == s, in_t = (h & t) == t;
            if (in_s) ps += w[h];
            if (in_t) pt += w[h];
            if (in_s && in_t) pst += w[h];
        }
        T viol = ps * pt - pst;
        if (viol < T{}) viol = -viol;
        if (viol > out.worst) {
            out.worst = viol;
            out.witness = std::make_pair(s, t);
        }
    }
    return out;
}

// Joint law of the configurations induced on two disjoint vertex sets must
// factorize. Returns the largest |P(a)P(b) - P(a,b)| over all cells.
template <class T>
T restriction_check(const LabeledGraph& g, const std::vector<T>& w) {
    auto supp = support_list(w);
    int n = g.n();
    require(n <= 14, Err::exhaustive_limit_exceeded, "restriction check needs n <= 14");
    std::vector<EdgeMask> within(size_t{1} << n, 0); // edges with both endpoints inside
    for (std::uint32_t a = 1; a < (std::uint32_t{1} << n); ++a) {
        EdgeMask em = 0;
        for (int e = 0; e < g.m(); ++e) {
            auto [u, v] = g.edge(e);
            if ((a >> u & 1u) && (a >> v & 1u)) em |= EdgeMask{1} << e;
        }
        within[a] = em;
    }
    T worst{};
    std::uint32_t all = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);
    for (std::uint32_t a = 1; a <= all; ++a) {
        std::uint32_t rest = all & ~a;
        for (std::uint32_t b = rest; b; b = (b - 1) & rest) {
            if (b > a) continue; // unordered
            if (within[a] == 0 || within[b] == 0) continue; // constraint is vacuous
            std::map<std::pair<EdgeMask, EdgeMask>, T> joint;
            std::map<EdgeMask, T> ma, mb;
            for (EdgeMask h : supp) {
                EdgeMask ha = h & within[a], hb = h & within[b];
                joint[{ha, hb}] += w[h];
                ma[ha] += w[h];
                mb[hb] += w[h];
            }
            for (const auto& [ka, pa] : ma)
                for (const auto& [kb, pb] : mb) {
                    T pj{};
                    auto it = joint.find({ka, kb});
                    if (it != joint.end()) pj = it->second;
                    T viol = pa * pb - pj;
                    if (viol < T{}) viol = -viol;
                    if (viol > worst) worst = viol;
                }
        }
        if (a == all) break;
    }
    return worst;
}

// Minimum vertex distance between the supports of two edge sets.
int support_distance(const LabeledGraph& g, EdgeMask s, EdgeMask t) {
    std::uint64_t src = g.support_of(s), dst = g.support_of(t);
    std::vector<int> dist(static_cast<size_t>(g.n()), -1);
    std::vector<int> queue;
    for (int v = 0; v < g.n(); ++v)
        if (src >> v & 1u) {
            dist[static_cast<size_t>(v)] = 0;
            queue.push_back(v);
        }
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        if (dst >> v & 1u) return dist[static_cast<size_t>(v)];
        for (int u : g.adjacency()[static_cast<size_t>(v)])
            if (dist[static_cast<size_t>(u)] < 0) {
                dist[static_cast<size_t>(u)] = dist[static_cast<size_t>(v)] + 1;
                queue.push_back(u);
            }
    }
    return g.n(); // disconnected: farther than any k we test
}

} // namespace

IndependenceReport check_k_independence(const Measure& mu, int k, double tolerance) {
    require(k >= 1, Err::usage_error, "k >= 1");
    auto pairs = mu.graph().disjoint_support_pairs();
    if (k > 1) {
        std::vector<std::pair<EdgeMask, EdgeMask>> far;
        for (auto [s, t] : pairs)
            if (support_distance(mu.graph(), s, t) >= k) far.emplace_back(s, t);
        pairs = std::move(far);
    }
    IndependenceReport rep;
    if (mu.mode() == Mode::exact) {
        auto out = product_law_check(mu.weights_exact(), pairs);
        rep.worst_exact = out.worst;
        rep.worst_approx = rat_double(out.worst);
        rep.witness = out.witness;
        rep.passed = out.worst == 0;
        if (k == 1) {
            Rat rworst = restriction_check(mu.graph(), mu.weights_exact());
            rep.restriction_agrees = (rworst == 0) == rep.passed;
        } else {
            rep.restriction_agrees = true;
        }
    } else {
        auto out = product_law_check(mu.weights_floating(), pairs);
        rep.worst_approx = out.worst;
        rep.witness = out.witness;
        rep.passed = out.worst <= tolerance;
        if (k == 1) {
            double rworst = restriction_check(mu.graph(), mu.weights_floating());
            rep.restriction_agrees = (rworst <= tolerance) == rep.passed;
        } else {
            rep.restriction_agrees = true;
        }
    }
    return rep;
}

IndependenceReport check_one_independence(const Measure& mu, double tolerance) {
    return check_k_independence(mu, 1, tolerance);
}

Measure sparsify(const Measure& mu, const Rat& p_target) {
    require(mu.mode() == Mode::exact, Err::usage_error, "sparsify needs an exact measure");
    require(p_target >= 0 && p_target <= 1, Err::out_of_range, "p_target in [0,1]");
    const auto& g = mu.graph();
    std::vector<Rat> w = mu.weights_exact();
    for (int e = 0; e < g.m(); ++e) {
        Rat marg = upward_sum(w, EdgeMask{1} << e);
        require(marg >= p_target, Err::target_above_marginal,
                "edge " + std::to_string(e) + " has marginal " + rat_str(marg) + " < target");
        if (marg == 0) continue; // p_target is 0 too; nothing to thin
        Rat keep = p_target / marg;
        if (keep == 1) continue;
        Rat drop = 1 - keep;
        for (size_t h = 0; h < w.size(); ++h) {
            if (!(h >> e & 1u)) continue;
            w[h ^ (size_t{1} << e)] += w[h] * drop;
            w[h] *= keep;
        }
    }
    return Measure::exact(g, std::move(w));
}

Rat connectivity_probability(const Measure& mu) {
    const auto& g = mu.graph();
    Rat acc = 0;
    for (EdgeMask h : support_list(mu.weights_exact()))
        if (g.is_connected_subgraph(h)) acc += mu.weights_exact()[h];
    return acc;
}

double connectivity_probability_approx(const Measure& mu) {
    if (mu.mode() == Mode::exact) return rat_double(connectivity_probability(mu));
    const auto& g = mu.graph();
    double acc = 0;
    for (EdgeMask h : support_list(mu.weights_floating()))
        if (g.is_connected_subgraph(h)) acc += mu.weights_floating()[h];
    return acc;
}

namespace {

template <class T>
std::vector<T> orbit_average(const LabeledGraph& g, const std::vector<T>& w,
                             const std::vector<VertexPermutation>& group, const T& inv_size) {
    std::vector<std::vector<int>> edge_perm;
    edge_perm.reserve(group.size());
    for (const auto& sigma : group) {
        std::vector<int> ep(static_cast<size_t>(g.m()));
        for (int e = 0; e < g.m(); ++e) {
            auto [u, v] = g.edge(e);
            ep[static_cast<size_t>(e)] =
                g.edge_index(sigma.map[static_cast<size_t>(u)], sigma.map[static_cast<size_t>(v)]);
        }
        edge_perm.push_back(std::move(ep));
    }
    std::vector<T> out(w.size(), T{});
    for (size_t h = 0; h < w.size(); ++h) {
        if (w[h] == T{}) continue;
        for (const auto& ep : edge_perm) {
            EdgeMask img = 0;
            for (int e = 0; e < g.m(); ++e)
                if (h >> e & 1u) img |= EdgeMask{1} << ep[static_cast<size_t>(e)];
            out[img] += w[h] * inv_size;
        }
    }
    return out;
}

} // namespace

Measure symmetrize(const Measure& mu) {
    const auto& g = mu.graph();
    auto group = g.automorphisms();
    if (mu.mode() == Mode::exact) {
        Rat inv(1, static_cast<unsigned long>(group.size()));
        inv.canonicalize();
        return Measure::exact(g, orbit_average(g, mu.weights_exact(), group, inv));
    }
    double inv = 1.0 / static_cast<double>(group.size());
    return Measure::floating(g, orbit_average(g, mu.weights_floating(), group, inv),
                             mu.tolerance());
}

bool VertexBasedMeasure::open(int edge, int su, int sv) const {
    auto [u, v] = graph.edge(edge);
    (void)u;
    int nv = state_count(v);
    return edge_open[static_cast<size_t>(edge)][static_cast<size_t>(su * nv + sv)] != 0;
}

void VertexBasedMeasure::check_shape() const {
    require(static_cast<int>(state_dists.size()) == graph.n(), Err::invalid_size,
            "one state distribution per vertex");
    for (const auto& d : state_dists) {
        require(!d.empty(), Err::invalid_size, "empty state space");
        Rat mass = 0;
        for (const Rat& p : d) {
            require(p >= 0, Err::negative_weight, "negative state probability");
            mass += p;
        }
        require(mass == 1, Err::mass_mismatch, "state distribution sums to " + rat_str(mass));
    }
    require(static_cast<int>(edge_open.size()) == graph.m(), Err::invalid_size,
            "one predicate table per edge");
    for (int e = 0; e < graph.m(); ++e) {
        auto [u, v] = graph.edge(e);
        require(edge_open[static_cast<size_t>(e)].size() ==
                    static_cast<size_t>(state_count(u)) * static_cast<size_t>(state_count(v)),
                Err::invalid_size, "predicate table size mismatch on edge " + std::to_string(e));
    }
}

Rat vbm_edge_marginal(const VertexBasedMeasure& vbm, int edge) {
    auto [u, v] = vbm.graph.edge(edge);
    Rat acc = 0;
    for (int su = 0; su < vbm.state_count(u); ++su)
        for (int sv = 0; sv < vbm.state_count(v); ++sv)
            if (vbm.open(edge, su, sv))
                acc += vbm.state_dists[static_cast<size_t>(u)][static_cast<size_t>(su)] *
                       vbm.state_dists[static_cast<size_t>(v)][static_cast<size_t>(sv)];
    return acc;
}

namespace {

void expand_states(const VertexBasedMeasure& vbm, int v, const Rat& prob, EdgeMask mask,
                   std::vector<int>& state, std::vector<Rat>& weights) {
    const auto& g = vbm.graph;
    if (v == g.n()) {
        weights[mask] += prob;
        return;
    }
    for (int s = 0; s < vbm.state_count(v); ++s) {
        const Rat& ps = vbm.state_dists[static_cast<size_t>(v)][static_cast<size_t>(s)];
        if (ps == 0) continue;
        state[static_cast<size_t>(v)] = s;
        EdgeMask add = 0;
        for (int u : g.adjacency()[static_cast<size_t>(v)]) {
            if (u >= v) continue; // only edges whose both endpoints are decided
            int e = g.edge_index(u, v);
            if (vbm.open(e, state[static_cast<size_t>(u)], s)) add |= EdgeMask{1} << e;
        }
        expand_states(vbm, v + 1, prob * ps, mask | add, state, weights);
    }
}

} // namespace

Measure from_vertex_based(const VertexBasedMeasure& vbm) {
    vbm.check_shape();
    const auto& g = vbm.graph;
    require(g.m() <= kMaxExhaustiveEdges, Err::exhaustive_limit_exceeded,
            "explicit expansion needs m <= 24");
    double combos = 1;
    for (int v = 0; v < g.n(); ++v) {
        combos *= vbm.state_count(v);
        require(combos <= 1e7, Err::state_space_too_large,
                "state space exceeds 10^7 combinations");
    }
    std::vector<Rat> weights(size_t{1} << g.m(), Rat(0));
    std::vector<int> state(static_cast<size_t>(g.n()), 0);
    expand_states(vbm, 0, Rat(1), 0, state, weights);
    return Measure::exact(g, std::move(weights));
}

} // namespace perco
