#include "perco/lp.hpp"

#include <algorithm>

namespace perco {

LinearProgram build_lp(const LabeledGraph& g, const Rat& p, Direction dir) {
    require(g.m() >= 1 && g.m() <= kMaxLpEdges, Err::exhaustive_limit_exceeded,
            "LP construction needs 1 <= m <= 12");
    require(p >= 0 && p <= 1, Err::out_of_range, "p in [0,1]");
    LinearProgram lp;
    lp.graph = g;
    lp.p = p;
    lp.direction = dir;
    size_t cols = size_t{1} << g.m();
    lp.c.assign(cols, Rat(0));
    for (size_t h = 0; h < cols; ++h)
        if (g.is_connected_subgraph(static_cast<EdgeMask>(h))) lp.c[h] = 1;

    auto add_row = [&](LinearProgram::RowInfo info, std::vector<Rat> row, Rat rhs) {
        lp.row_info.push_back(info);
        lp.a.push_back(std::move(row));
        lp.q.push_back(std::move(rhs));
    };

    add_row({LinearProgram::RowInfo::Kind::mass}, std::vector<Rat>(cols, Rat(1)), Rat(1));
    for (int e = 0; e < g.m(); ++e) {
        std::vector<Rat> row(cols, Rat(0));
        for (size_t h = 0; h < cols; ++h)
            if (h >> e & 1u) row[h] = 1;
        add_row({LinearProgram::RowInfo::Kind::edge, e}, std::move(row), p);
    }
    for (auto [s, t] : g.disjoint_support_pairs()) {
        int bs = __builtin_popcount(s), bt = __builtin_popcount(t);
        require(bs == 1 || bt == 1, Err::non_linear_programme,
                "a disjoint-support pair has no singleton side; the programme is not linear");
        EdgeMask big = s, single = t;
        if (bt != 1) std::swap(big, single);
        std::vector<Rat> row(cols, Rat(0));
        EdgeMask both = big | single;
        for (size_t h = 0; h < cols; ++h) {
            Rat v(0);
            if ((h & both) == both) v += 1;
            if ((h & big) == big) v -= p;
            row[h] = v;
        }
        LinearProgram::RowInfo info{LinearProgram::RowInfo::Kind::pair};
        info.s = big;
        info.t = single;
        add_row(info, std::move(row), Rat(0));
    }
    return lp;
}

namespace {

// Dense exact tableau simplex, minimization form: min c'x, Ax = b, x >= 0.
struct Tableau {
    int rows, cols; // structural columns only
    std::vector<std::vector<Rat>> t; // rows x (cols + rows + 1); artificials, then rhs
    std::vector<Rat> red;            // reduced costs, cols + rows + 1 entries
    std::vector<int> basis;          // per row, column index (may be artificial)
    std::vector<int> live_rows;      // original row indices still present

    int width() const { return cols + rows + 1; }

    void pivot(int pr, int pc) {
        Rat inv = 1 / t[static_cast<size_t>(pr)][static_cast<size_t>(pc)];
        auto& prow = t[static_cast<size_t>(pr)];
        for (auto& v : prow) v *= inv;
        for (size_t i = 0; i < t.size(); ++i) {
            if (static_cast<int>(i) == pr) continue;
            Rat f = t[i][static_cast<size_t>(pc)];
            if (f == 0) continue;
            for (int j = 0; j < width(); ++j) t[i][static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
        }
        Rat f = red[static_cast<size_t>(pc)];
        if (f != 0)
            for (int j = 0; j < width(); ++j) red[static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
        basis[static_cast<size_t>(pr)] = pc;
    }

    // Bland: entering = smallest eligible column, leaving = ratio test with
    // ties broken by smallest basis variable.
    bool iterate(int allowed_cols) {
        while (true) {
            int enter = -1;
            for (int j = 0; j < allowed_cols; ++j)
                if (red[static_cast<size_t>(j)] < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return true; // optimal
            int leave = -1;
            Rat best;
            for (size_t i = 0; i < t.size(); ++i) {
                const Rat& a = t[i][static_cast<size_t>(enter)];
                if (a <= 0) continue;
                Rat ratio = t[i][static_cast<size_t>(width() - 1)] / a;
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[static_cast<size_t>(leave)])) {
                    best = ratio;
                    leave = static_cast<int>(i);
                }
            }
            if (leave < 0) return false; // unbounded
            pivot(leave, enter);
        }
    }
};

struct CoreSolution {
    Rat optimum;
    std::vector<Rat> w;
    std::vector<Rat> x; // one per original row; zero for dropped redundant rows
};

// Exact Gaussian elimination: solves M y = b. Returns unique/inconsistent/
// underdetermined; when `free_as_zero` is set, underdetermined systems get
// free variables pinned to zero and report success.
enum class LinStatus { unique, inconsistent, underdetermined };

LinStatus solve_linear(std::vector<std::vector<Rat>> m, std::vector<Rat> b, std::vector<Rat>& y,
                       bool free_as_zero) {
    size_t rows = m.size();
    size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<int> pivot_col_of_row;
    size_t rank_row = 0;
    std::vector<int> col_pivot_row(cols, -1);
    for (size_t col = 0; col < cols && rank_row < rows; ++col) {
        size_t sel = rank_row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[rank_row]);
        std::swap(b[sel], b[rank_row]);
        Rat inv = 1 / m[rank_row][col];
        for (size_t j = col; j < cols; ++j) m[rank_row][j] *= inv;
        b[rank_row] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank_row) continue;
            Rat f = m[i][col];
            if (f == 0) continue;
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank_row][j];
            b[i] -= f * b[rank_row];
        }
        col_pivot_row[col] = static_cast<int>(rank_row);
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++rank_row;
    }
    for (size_t i = rank_row; i < rows; ++i)
        if (b[i] != 0) return LinStatus::inconsistent;
    bool full_rank = rank_row == cols;
    if (!full_rank && !free_as_zero) return LinStatus::underdetermined;
    y.assign(cols, Rat(0));
    for (size_t col = 0; col < cols; ++col)
        if (col_pivot_row[col] >= 0) y[col] = b[static_cast<size_t>(col_pivot_row[col])];
    if (!full_rank) {
        // verify the pinned solution really solves the system
        return LinStatus::underdetermined;
    }
    return LinStatus::unique;
}

CoreSolution simplex_min(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                         const std::vector<Rat>& cost) {
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(cost.size());
    Tableau tb;
    tb.rows = rows;
    tb.cols = cols;
    tb.basis.resize(static_cast<size_t>(rows));
    tb.live_rows.resize(static_cast<size_t>(rows));
    tb.t.assign(static_cast<size_t>(rows), std::vector<Rat>(static_cast<size_t>(tb.width()), Rat(0)));
    for (int i = 0; i < rows; ++i) {
        bool neg = b[static_cast<size_t>(i)] < 0;
        for (int j = 0; j < cols; ++j)
            tb.t[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                neg ? Rat(-a[static_cast<size_t>(i)][static_cast<size_t>(j)]) : a[static_cast<size_t>(i)][static_cast<size_t>(j)];
        tb.t[static_cast<size_t>(i)][static_cast<size_t>(cols + i)] = 1;
        tb.t[static_cast<size_t>(i)][static_cast<size_t>(tb.width() - 1)] =
            neg ? Rat(-b[static_cast<size_t>(i)]) : b[static_cast<size_t>(i)];
        tb.basis[static_cast<size_t>(i)] = cols + i;
        tb.live_rows[static_cast<size_t>(i)] = i;
    }
    // Phase 1: minimize the sum of artificials.
    tb.red.assign(static_cast<size_t>(tb.width()), Rat(0));
    for (int j = 0; j < cols; ++j) {
        Rat acc(0);
        for (int i = 0; i < rows; ++i) acc += tb.t[static_cast<size_t>(i)][static_cast<size_t>(j)];
        tb.red[static_cast<size_t>(j)] = -acc;
    }
    {
        Rat acc(0);
        for (int i = 0; i < rows; ++i) acc += tb.t[static_cast<size_t>(i)][static_cast<size_t>(tb.width() - 1)];
        tb.red[static_cast<size_t>(tb.width() - 1)] = -acc;
    }
    require(tb.iterate(cols), Err::internal, "phase 1 cannot be unbounded");
    Rat phase1 = -tb.red[static_cast<size_t>(tb.width() - 1)];
    require(phase1 >= 0, Err::internal, "negative phase-1 objective");
    if (phase1 != 0) fail(Err::infeasible, "no measure satisfies the constraints");

    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (int i = static_cast<int>(tb.t.size()) - 1; i >= 0; --i) {
        if (tb.basis[static_cast<size_t>(i)] < cols) continue;
        int pc = -1;
        for (int j = 0; j < cols; ++j)
            if (tb.t[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
                pc = j;
                break;
            }
        if (pc >= 0) {
            tb.pivot(i, pc);
        } else {
            tb.t.erase(tb.t.begin() + i);
            tb.basis.erase(tb.basis.begin() + i);
            tb.live_rows.erase(tb.live_rows.begin() + i);
        }
    }

    // Phase 2 on the real objective.
    tb.red.assign(static_cast<size_t>(tb.width()), Rat(0));
    for (int j = 0; j < cols; ++j) tb.red[static_cast<size_t>(j)] = cost[static_cast<size_t>(j)];
    for (size_t i = 0; i < tb.t.size(); ++i) {
        const Rat& cb = cost[static_cast<size_t>(tb.basis[i])];
        if (cb == 0) continue;
        for (int j = 0; j < tb.width(); ++j)
            tb.red[static_cast<size_t>(j)] -= cb * tb.t[i][static_cast<size_t>(j)];
    }
    if (!tb.iterate(cols)) fail(Err::unbounded, "objective unbounded below");

    CoreSolution sol;
    sol.w.assign(static_cast<size_t>(cols), Rat(0));
    for (size_t i = 0; i < tb.t.size(); ++i)
        sol.w[static_cast<size_t>(tb.basis[i])] = tb.t[i][static_cast<size_t>(tb.width() - 1)];
    sol.optimum = 0;
    for (int j = 0; j < cols; ++j) sol.optimum += cost[static_cast<size_t>(j)] * sol.w[static_cast<size_t>(j)];

    // Dual from the final basis: solve B^T x = c_B over the live rows.
    size_t r = tb.t.size();
    std::vector<std::vector<Rat>> bt(r, std::vector<Rat>(r, Rat(0)));
    std::vector<Rat> cb(r, Rat(0));
    for (size_t k = 0; k < r; ++k) {
        int col = tb.basis[k];
        for (size_t i = 0; i < r; ++i)
            bt[k][i] = a[static_cast<size_t>(tb.live_rows[i])][static_cast<size_t>(col)];
        cb[k] = cost[static_cast<size_t>(col)];
    }
    std::vector<Rat> xr;
    LinStatus st = solve_linear(std::move(bt), std::move(cb), xr, false);
    require(st == LinStatus::unique, Err::internal, "final basis is singular");
    sol.x.assign(a.size(), Rat(0));
    for (size_t i = 0; i < r; ++i) sol.x[static_cast<size_t>(tb.live_rows[i])] = xr[i];
    return sol;
}

void certify(const LinearProgram& lp, const LPSolution& sol) {
    // primal feasibility
    for (int i = 0; i < lp.rows(); ++i) {
        Rat acc(0);
        for (int j = 0; j < lp.cols(); ++j)
            if (lp.a[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0)
                acc += lp.a[static_cast<size_t>(i)][static_cast<size_t>(j)] * sol.w[static_cast<size_t>(j)];
        require(acc == lp.q[static_cast<size_t>(i)], Err::internal, "primal constraint violated");
    }
    Rat qx(0);
    for (int i = 0; i < lp.rows(); ++i) qx += lp.q[static_cast<size_t>(i)] * sol.x[static_cast<size_t>(i)];
    require(qx == sol.optimum, Err::internal, "strong duality gap");
    bool minimize = lp.direction == Direction::minimize;
    for (int j = 0; j < lp.cols(); ++j) {
        require(sol.w[static_cast<size_t>(j)] >= 0, Err::internal, "negative primal weight");
        Rat ax(0);
        for (int i = 0; i < lp.rows(); ++i)
            if (lp.a[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0)
                ax += lp.a[static_cast<size_t>(i)][static_cast<size_t>(j)] * sol.x[static_cast<size_t>(i)];
        if (minimize)
            require(ax <= lp.c[static_cast<size_t>(j)], Err::internal, "dual infeasible");
        else
            require(ax >= lp.c[static_cast<size_t>(j)], Err::internal, "dual infeasible");
        if (sol.w[static_cast<size_t>(j)] != 0)
            require(ax == lp.c[static_cast<size_t>(j)], Err::internal, "complementary slackness violated");
    }
}

} // namespace

LPSolution solve(const LinearProgram& lp) {
    bool minimize = lp.direction == Direction::minimize;
    std::vector<Rat> cost = lp.c;
    if (!minimize)
        for (auto& v : cost) v = -v;
    CoreSolution core = simplex_min(lp.a, lp.q, cost);
    LPSolution sol;
    sol.w = std::move(core.w);
    if (minimize) {
        sol.optimum = core.optimum;
        sol.x = std::move(core.x);
    } else {
        sol.optimum = -core.optimum;
        sol.x = std::move(core.x);
        for (auto& v : sol.x) v = -v;
    }
    for (int j = 0; j < lp.cols(); ++j)
        if (sol.w[static_cast<size_t>(j)] == 0) sol.zero_support.push_back(j);
    certify(lp, sol);
    return sol;
}

Rat f_lp(const LabeledGraph& g, const Rat& p) {
    return solve(build_lp(g, p, Direction::minimize)).optimum;
}

Rat F_lp(const LabeledGraph& g, const Rat& p) {
    return solve(build_lp(g, p, Direction::maximize)).optimum;
}

bool certify_extremal(const LabeledGraph& g, const Rat& p, const Measure& mu, Direction dir) {
    require(mu.graph() == g, Err::usage_error, "measure lives on a different graph");
    validate(mu);
    for (int e = 0; e < g.m(); ++e)
        if (upward_marginal(mu, EdgeMask{1} << e) != p) return false;
    LPSolution sol = solve(build_lp(g, p, dir));
    return connectivity_probability(mu) == sol.optimum;
}

SupportMethodResult support_method(const LabeledGraph& g, const Rat& p_probe,
                                   const std::vector<Rat>& grid, Direction dir) {
    SupportMethodResult out;
    LPSolution probe = solve(build_lp(g, p_probe, dir));
    out.zero_support = probe.zero_support;
    std::vector<char> zero(size_t{1} << g.m(), 0);
    for (int j : out.zero_support) zero[static_cast<size_t>(j)] = 1;
    std::vector<int> keep;
    for (int j = 0; j < static_cast<int>(zero.size()); ++j)
        if (!zero[static_cast<size_t>(j)]) keep.push_back(j);

    for (const Rat& p : grid) {
        LinearProgram lp = build_lp(g, p, dir);
        CurveSample sample;
        sample.p = p;
        // primal: A restricted to the kept columns must pin w uniquely
        std::vector<std::vector<Rat>> m(static_cast<size_t>(lp.rows()),
                                        std::vector<Rat>(keep.size(), Rat(0)));
        for (int i = 0; i < lp.rows(); ++i)
            for (size_t k = 0; k < keep.size(); ++k)
                m[static_cast<size_t>(i)][k] = lp.a[static_cast<size_t>(i)][static_cast<size_t>(keep[k])];
        std::vector<Rat> wk;
        LinStatus st = solve_linear(m, lp.q, wk, false);
        if (st == LinStatus::underdetermined)
            fail(Err::singular_system, "frozen support does not determine a unique solution");
        if (st == LinStatus::inconsistent) {
            out.samples.push_back(std::move(sample));
            continue;
        }
        std::vector<Rat> w(size_t{1} << g.m(), Rat(0));
        for (size_t k = 0; k < keep.size(); ++k) w[static_cast<size_t>(keep[k])] = wk[k];
        // dual: equality on the kept columns
        std::vector<std::vector<Rat>> md(keep.size(), std::vector<Rat>(static_cast<size_t>(lp.rows()), Rat(0)));
        std::vector<Rat> cd(keep.size(), Rat(0));
        for (size_t k = 0; k < keep.size(); ++k) {
            for (int i = 0; i < lp.rows(); ++i)
                md[k][static_cast<size_t>(i)] = lp.a[static_cast<size_t>(i)][static_cast<size_t>(keep[k])];
            cd[k] = lp.c[static_cast<size_t>(keep[k])];
        }
        std::vector<Rat> x;
        LinStatus stx = solve_linear(md, cd, x, true);
        Rat value(0);
        for (size_t j = 0; j < w.size(); ++j)
            if (w[j] != 0) value += lp.c[j] * w[j];
        sample.value = value;
        bool ok = stx != LinStatus::inconsistent;
        if (ok)
            for (const Rat& wj : w)
                if (wj < 0) {
                    ok = false;
                    break;
                }
        if (ok) {
            // dual feasibility over every column, plus matching objective
            Rat qx(0);
            for (int i = 0; i < lp.rows(); ++i) qx += lp.q[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
            if (qx != value) ok = false;
            bool minimize = dir == Direction::minimize;
            for (int j = 0; ok && j < lp.cols(); ++j) {
                Rat ax(0);
                for (int i = 0; i < lp.rows(); ++i)
                    if (lp.a[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0)
                        ax += lp.a[static_cast<size_t>(i)][static_cast<size_t>(j)] * x[static_cast<size_t>(i)];
                if (minimize ? ax > lp.c[static_cast<size_t>(j)] : ax < lp.c[static_cast<size_t>(j)]) ok = false;
            }
        }
        sample.valid = ok;
        out.samples.push_back(std::move(sample));
    }

    int piece_id = 0;
    for (size_t i = 0; i < out.samples.size();) {
        if (!out.samples[i].valid) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < out.samples.size() && out.samples[j].valid) ++j;
        CurvePiece piece;
        piece.lo = out.samples[i].p;
        piece.hi = out.samples[j - 1].p;
        piece.piece_id = piece_id++;
        piece.samples.assign(out.samples.begin() + static_cast<long>(i),
                             out.samples.begin() + static_cast<long>(j));
        out.pieces.push_back(std::move(piece));
        i = j;
    }
    return out;
}

} // namespace perco
