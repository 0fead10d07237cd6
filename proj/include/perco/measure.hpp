#pragma once

#include <optional>
#include <vector>

#include "perco/graph.hpp"
#include "perco/rational.hpp"

namespace perco {

enum class Mode { exact, floating };

// An explicit probability measure over the 2^m edge subsets of a graph.
// Weight index i corresponds to EdgeMask i. Exact rational weights are the
// default; floating weights exist only for trig-derived boundary parameters
// and carry a declared tolerance.
class Measure {
public:
    static Measure exact(LabeledGraph g, std::vector<Rat> weights);
    // Negative float weights within tolerance are clamped to 0, then the
    // vector is renormalized.
    static Measure floating(LabeledGraph g, std::vector<double> weights, double tolerance);

    const LabeledGraph& graph() const { return g_; }
    Mode mode() const { return mode_; }
    double tolerance() const { return tol_; }
    size_t size() const { return mode_ == Mode::exact ? wq_.size() : wd_.size(); }
    const std::vector<Rat>& weights_exact() const;
    const std::vector<double>& weights_floating() const;
    double weight_as_double(EdgeMask h) const;

private:
    Measure(LabeledGraph g, Mode mode) : g_(std::move(g)), mode_(mode) {}
    LabeledGraph g_;
    Mode mode_;
    std::vector<Rat> wq_;
    std::vector<double> wd_;
    double tol_ = 0.0;
};

struct MarginalReport {
    std::vector<Rat> exact;     // per-edge marginals (exact mode)
    std::vector<double> approx; // per-edge marginals (floating mode)
};

struct IndependenceReport {
    bool passed = false;
    Rat worst_exact = 0;        // largest |mu(S)mu(T) - mu(S u T)| seen (exact mode)
    double worst_approx = 0.0;  // same in floating mode
    std::optional<std::pair<EdgeMask, EdgeMask>> witness;
    bool restriction_agrees = false; // the induced-restriction check reached the same verdict
};

// Confirms nonnegativity and unit mass, and reports every edge marginal.
// Throws NegativeWeight / MassMismatch.
MarginalReport validate(const Measure& mu);

Rat upward_marginal(const Measure& mu, EdgeMask s);             // exact mode
double upward_marginal_approx(const Measure& mu, EdgeMask s);   // either mode

// Minimum single-edge upward marginal ("lower edge-probability").
Rat edge_probability(const Measure& mu);
double edge_probability_approx(const Measure& mu);

// Verifies the product law mu(S)mu(T) = mu(S u T) over every pair of edge
// subsets with disjoint vertex supports, and cross-checks it against the
// induced-restriction formulation (joint distribution of the configurations
// induced on disjoint vertex sets A, B factorizes). The two verdicts must
// agree; `tolerance` applies in floating mode only.
IndependenceReport check_one_independence(const Measure& mu, double tolerance = 0.0);

// Same product law but only over pairs of edge sets at graph distance >= k
// (k = 1 reduces to check_one_independence's first formulation).
IndependenceReport check_k_independence(const Measure& mu, int k, double tolerance = 0.0);

// Independent per-edge thinning with retention p_target / marginal(e).
Measure sparsify(const Measure& mu, const Rat& p_target);

// Probability that the open subgraph contains a spanning tree.
Rat connectivity_probability(const Measure& mu);
double connectivity_probability_approx(const Measure& mu);

// Orbit average over the automorphism group. Preserves total mass,
// orbit-constant edge marginals, and connectivity probability exactly.
Measure symmetrize(const Measure& mu);

// Independent per-vertex states with finite state spaces, plus a per-edge
// open/closed predicate table (row-major over states of the smaller-labeled
// endpoint first).
struct VertexBasedMeasure {
    LabeledGraph graph;
    std::vector<std::vector<Rat>> state_dists;   // [vertex][state]
    std::vector<std::vector<char>> edge_open;    // [edge][s_u * |Omega_v| + s_v], u < v

    int state_count(int v) const { return static_cast<int>(state_dists[static_cast<size_t>(v)].size()); }
    bool open(int edge, int su, int sv) const;
    void check_shape() const; // distribution sums, table sizes
};

// Exact edge marginal of a vertex-based measure, straight from the two
// endpoint distributions.
Rat vbm_edge_marginal(const VertexBasedMeasure& vbm, int edge);

// Expands the vertex-based description into an explicit measure by summing
// state-combination probabilities into configuration weights. Refuses state
// spaces with more than 10^7 combinations.
Measure from_vertex_based(const VertexBasedMeasure& vbm);

} // namespace perco
