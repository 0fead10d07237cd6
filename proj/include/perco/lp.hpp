#pragma once

#include <optional>

#include "perco/measure.hpp"

namespace perco {

enum class Direction { minimize, maximize };

// The connectivity programme of a graph at edge-probability p: one column per
// edge subset, a mass row, one row per edge (marginal = p), and one row per
// disjoint-support pair with the singleton side's marginal substituted.
struct LinearProgram {
    struct RowInfo {
        enum class Kind { mass, edge, pair };
        Kind kind;
        int edge = -1;          // for edge rows
        EdgeMask s = 0, t = 0;  // for pair rows; t is the singleton side
    };

    LabeledGraph graph;
    Rat p;
    Direction direction = Direction::minimize;
    std::vector<std::vector<Rat>> a; // rows x 2^m
    std::vector<Rat> q;              // right-hand side
    std::vector<Rat> c;              // connectivity indicator per column
    std::vector<RowInfo> row_info;

    int rows() const { return static_cast<int>(a.size()); }
    int cols() const { return static_cast<int>(c.size()); }
};

inline constexpr int kMaxLpEdges = 12;

LinearProgram build_lp(const LabeledGraph& g, const Rat& p, Direction dir);

struct LPSolution {
    Rat optimum;
    std::vector<Rat> w; // primal point, one entry per edge subset
    std::vector<Rat> x; // dual multipliers, one per row; A^T x <= c for
                        // minimization, A^T x >= c for maximization
    std::vector<int> zero_support; // columns with w_j = 0

    Measure measure(const LabeledGraph& g) const { return Measure::exact(g, w); }
};

// Exact two-phase simplex with Bland's anti-cycling rule. Every solve is
// certified: A w = q, w >= 0, dual feasibility, q^T x = c^T w, and
// complementary slackness, all in exact arithmetic.
LPSolution solve(const LinearProgram& lp);

Rat f_lp(const LabeledGraph& g, const Rat& p);
Rat F_lp(const LabeledGraph& g, const Rat& p);

// True iff the measure has marginals exactly p and meets the LP optimum.
bool certify_extremal(const LabeledGraph& g, const Rat& p, const Measure& mu, Direction dir);

struct CurveSample {
    Rat p;
    std::optional<Rat> value; // empty when the frozen support admits no solution
    bool valid = false;       // primal and dual feasibility both certified
};

struct CurvePiece {
    Rat lo, hi;
    std::vector<CurveSample> samples;
    int piece_id = 0;
};

struct SupportMethodResult {
    std::vector<int> zero_support;     // from the probe solve
    std::vector<CurveSample> samples;  // every grid point, in order
    std::vector<CurvePiece> pieces;    // maximal valid runs
};

// The all-p method: solve once at p_probe, freeze the zero set, then for each
// grid point solve the resulting square systems for primal and dual and
// certify feasibility. Throws SingularSystem when the frozen support leaves
// primal degrees of freedom.
SupportMethodResult support_method(const LabeledGraph& g, const Rat& p_probe,
                                   const std::vector<Rat>& grid, Direction dir);

} // namespace perco
