#pragma once

#include <functional>
#include <string>
#include <utility>

#include "perco/measure.hpp"

namespace perco {

// Piecewise closed-form connectivity curves. Values are clamped to [0,1];
// the Markov families are lower bounds rather than exact values.
struct ClosedFormCurve {
    enum class Family {
        f_point,        // single vertex: f = 1
        f_path,         // needs n
        f_complete,     // needs n
        f_c4,
        f_c5,
        F_path,         // needs n
        F_complete,     // needs n
        F_c4,
        F_c5,
        f_cycle_markov, // (np-(n-2))/2, needs n
        f_c6_markov,    // max(3p-2, -p^3+3p^2-1)
        f_k_complete,   // 1 - n(1-p)/2 for k >= 2, needs n
    };
    Family family;
    int n = 0;

    double eval(double p) const;
    int fiber_vertex_count() const;
    static ClosedFormCurve parse(const std::string& spec); // e.g. "f:P5", "F:C4", "f:K12"
};

// Exact evaluation at rational p. Piece membership is decided exactly: the
// irrational thresholds involved for these graphs are quadratic surds.
Rat f_path_exact(int n, const Rat& p);
Rat f_complete_exact(int n, const Rat& p);
Rat f_c4_exact(const Rat& p);
Rat f_c5_exact(const Rat& p);
Rat F_path_exact(int n, const Rat& p);
Rat F_complete_exact(int n, const Rat& p);
Rat F_c4_exact(const Rat& p);
Rat F_c5_exact(const Rat& p);

// Whether rational p lies on or above the zero-connectivity threshold.
bool path_piece_is_upper(int n, const Rat& p);
bool complete_piece_is_upper(int n, const Rat& p);

struct Theorem41Result {
    bool verified = false; // the hypothesis f^2 >= (1-p)^v / (alpha(1-alpha)) holds
    Rat bound = 0;         // ((1-alpha) f)^ell when verified
    std::vector<Rat> x_trace, y_trace;
};

// Lower bound on the crossing probability of an ell-column product, given the
// fiber's connectivity value at p.
Theorem41Result theorem41_bound(const Rat& f_value, int fiber_vertices, const Rat& p,
                                const Rat& alpha, int ell);

// Unique root of f(p)^2 = 4 (1-p)^v in [0,1], bisected to 1e-12.
double p_star(const std::function<double(double)>& f, int fiber_vertices);
double p_star_curve(const ClosedFormCurve& curve);

struct PStarEntry {
    std::string fiber;
    double value;
};

// p-star values for the fibers treated in the upper-bound theorem: the point,
// the edge, K_3, C_4, C_5, and K_n up to max_complete_n.
std::vector<PStarEntry> theorem15_table(int max_complete_n = 64);

// (theta^2 + (1-theta)^2, theta^2 + (1-theta)/2): the two lattice
// lower-bound formulas evaluated at a supplied site-percolation constant.
std::pair<double, double> lattice_lower_bounds(double theta_site);

// 1 - k^k/(k+1)^(k+1), with 0^0 = 1. The k = 0 value is 0; k >= 1 is the
// meaningful range for the line-lattice threshold.
Rat k_indep_line_threshold(int k);

} // namespace perco
