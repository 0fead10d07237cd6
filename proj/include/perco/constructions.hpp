#pragma once

#include "perco/measure.hpp"

namespace perco {

// --- connectivity sequences -------------------------------------------------

// Path family: values[k] = g_k with g_0 = g_1 = 1, g_2 = p and
// g_k = g_{k-1} - (1-p) g_{k-2}. g_n is the best-possible probability that a
// 1-ipm on P_n with edge marginals >= p is connected.
std::vector<Rat> path_gn_values(int N, const Rat& p);
std::vector<double> path_gn_values(int N, double p);

// Complete family power sums: values[k] = s_k with s_0 = 2, s_1 = 1 and
// s_k = s_{k-1} - ((1-p)/2) s_{k-2}; s_n plays the role of g_n for K_n.
std::vector<Rat> complete_sn_values(int N, const Rat& p);
std::vector<double> complete_sn_values(int N, double p);

// Zero-connectivity thresholds. Both sequences increase strictly in n.
long double path_threshold(int n);     // (3 - tan^2(pi/(n+1))) / 4
long double complete_threshold(int n); // (1 - tan^2(pi/2n)) / 2

// Refuses p below the threshold, and refuses p inside a 1e-12 band around it
// (the thresholds are irrational; exact comparison is impossible there).
void require_at_least(const Rat& p, long double threshold, const std::string& what);

// --- extremal measures on paths, complete graphs and short cycles -----------

// Minimizing measures (edge marginals exactly p, least connectivity).
Measure path_measure(int n, const Rat& p);       // valid for p >= path threshold
Measure complete_measure(int n, const Rat& p);   // valid for p >= complete threshold
Measure path_measure_approx(int n, double p);    // floating variant
Measure complete_measure_approx(int n, double p);
Measure c4_min_measure(const Rat& p);
Measure c5_min_measure(const Rat& p);

// Maximizing measures (edge marginals exactly p, greatest connectivity).
Measure c4_max_measure(const Rat& p);
Measure c5_max_measure(const Rat& p);
Measure pn_max_measure(int n, const Rat& p);
Measure kn_max_measure(int n, const Rat& p);

// The 2-independent construction on K_n: with probability min(n(1-p)/2, 1) a
// uniformly chosen vertex loses its star, otherwise the graph is complete.
Measure kn_k_indep_measure(int n, const Rat& p);

// Two-state vertex-based measure on P_n whose expansion coincides with
// path_measure wherever the latter is defined, and which stays a valid
// construction (with zero connectivity) below the threshold.
VertexBasedMeasure path_vbm(int n, const Rat& p);

// --- ladder construction ----------------------------------------------------

struct LadderSequences {
    Rat p_input;
    // 1-indexed: p[0], r[0], s[0] are the n=1 values.
    std::vector<Rat> p, r, s;

    // The five monotonicity/range properties; throws InternalError on failure.
    void check_invariants() const;
};

LadderSequences ladder_sequences(const Rat& p, int N); // p in (1/2, 2/3)

// Number of columns after which all three sequences vanish: ceil(2/eps) for
// p = 2/3 - eps.
int ladder_length(const Rat& p);

// Vertex-based measure on P_N x P_2 (N = ladder_length(p)) with states
// {0,1,2}; horizontal edges open on nondecreasing states, vertical edges on
// equal states or a state-1 endpoint. Every edge marginal is >= p, exactly.
VertexBasedMeasure ladder_vbm(const Rat& p);

// One-dimensional tiling: vertex-based measure on P_window built from
// independent zero-connectivity path blocks of length N (smallest N with
// p < p_N), overlapping at shared endpoints. Requires p < 3/4.
VertexBasedMeasure line_tiling_vbm(const Rat& p, int window_length);

// Block length used by line_tiling_vbm: smallest N with g_N(p) < 0.
int line_tiling_block_length(const Rat& p);

} // namespace perco
