#include "perco/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "perco/constructions.hpp"

namespace perco {

namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

double f_path_eval(int n, double p) {
    if (n == 2) return p;
    if (static_cast<long double>(p) < path_threshold(n)) return 0.0;
    return path_gn_values(n, p)[static_cast<size_t>(n)];
}

double f_complete_eval(int n, double p) {
    if (n == 2) return p;
    if (static_cast<long double>(p) < complete_threshold(n)) return 0.0;
    return complete_sn_values(n, p)[static_cast<size_t>(n)];
}

double f_c5_eval(double p) {
    if (3 * p * p < 1) return 0.0;
    return p * (3 * p * p - 1) / (3 * p - 1);
}

} // namespace

double ClosedFormCurve::eval(double p) const {
    require(p >= 0.0 && p <= 1.0, Err::out_of_range, "p in [0,1]");
    switch (family) {
        case Family::f_point: return 1.0;
        case Family::f_path: return clamp01(f_path_eval(n, p));
        case Family::f_complete: return clamp01(f_complete_eval(n, p));
        case Family::f_c4: return p < 0.5 ? 0.0 : 2 * p - 1;
        case Family::f_c5: return clamp01(f_c5_eval(p));
        case Family::F_path: return std::pow(p, n / 2);
        case Family::F_complete: return clamp01(1.0 - f_complete_eval(n, 1 - p));
        case Family::F_c4: return std::min(2 * p * p, 2 * p - p * p);
        case Family::F_c5:
            if (p < 0.5) return 5 * p * p * (p + 1) / (p + 4);
            if (p < 0.6) return 5 * p * p / 3;
            return p * (2 - 5 * p * (1 - p)) / (5 - 3 * p);
        case Family::f_cycle_markov: return clamp01((n * p - (n - 2)) / 2);
        case Family::f_c6_markov:
            return clamp01(std::max(3 * p - 2, -p * p * p + 3 * p * p - 1));
        case Family::f_k_complete: return clamp01(1 - n * (1 - p) / 2);
    }
    fail(Err::internal, "unhandled curve family");
}

int ClosedFormCurve::fiber_vertex_count() const {
    switch (family) {
        case Family::f_point: return 1;
        case Family::f_path:
        case Family::F_path:
        case Family::f_complete:
        case Family::F_complete:
        case Family::f_k_complete: return n;
        case Family::f_c4:
        case Family::F_c4: return 4;
        case Family::f_c5:
        case Family::F_c5: return 5;
        case Family::f_cycle_markov:
        case Family::f_c6_markov: return family == Family::f_c6_markov ? 6 : n;
    }
    fail(Err::internal, "unhandled curve family");
}

ClosedFormCurve ClosedFormCurve::parse(const std::string& spec) {
    auto colon = spec.find(':');
    require(colon != std::string::npos, Err::usage_error,
            "curve spec must look like f:P5, F:C4, f:K12, f:K1, f:markovC8, f:kindepK6");
    std::string kind = spec.substr(0, colon), graph = spec.substr(colon + 1);
    bool maximize = kind == "F";
    require(kind == "f" || kind == "F", Err::usage_error, "curve kind must be f or F");
    ClosedFormCurve out{Family::f_point, 0};
    auto tail_int = [&](size_t at) {
        require(graph.size() > at, Err::usage_error, "missing size in curve spec");
        return std::stoi(graph.substr(at));
    };
    if (graph == "K1") {
        require(!maximize, Err::usage_error, "no maximization curve for a single vertex");
        out.family = Family::f_point;
    } else if (graph == "C4") {
        out.family = maximize ? Family::F_c4 : Family::f_c4;
    } else if (graph == "C5") {
        out.family = maximize ? Family::F_c5 : Family::f_c5;
    } else if (graph.rfind("markovC", 0) == 0) {
        require(!maximize, Err::usage_error, "Markov bounds are for f only");
        out.n = tail_int(7);
        require(out.n >= 6, Err::usage_error, "Markov cycle bound needs n >= 6");
        out.family = out.n == 6 ? Family::f_c6_markov : Family::f_cycle_markov;
    } else if (graph.rfind("kindepK", 0) == 0) {
        require(!maximize, Err::usage_error, "k-independent bound is for f only");
        out.n = tail_int(7);
        out.family = Family::f_k_complete;
    } else if (graph[0] == 'P') {
        out.n = tail_int(1);
        require(out.n >= 2, Err::usage_error, "path needs n >= 2");
        out.family = maximize ? Family::F_path : Family::f_path;
    } else if (graph[0] == 'K') {
        out.n = tail_int(1);
        require(out.n >= 2, Err::usage_error, "complete graph needs n >= 2");
        out.family = maximize ? Family::F_complete : Family::f_complete;
    } else {
        fail(Err::usage_error, "unknown curve graph '" + graph + "'");
    }
    return out;
}

// --- exact piecewise evaluation ----------------------------------------------

bool path_piece_is_upper(int n, const Rat& p) {
    require(n >= 2, Err::invalid_size, "path needs n >= 2");
    require(p >= 0 && p <= 1, Err::out_of_range, "p in [0,1]");
    switch (n) {
        case 2: return true;                       // threshold 0
        case 3: return p >= Rat(1, 2);
        case 4: return (2 * p + 1) * (2 * p + 1) >= 5; // threshold (sqrt5-1)/2
        case 5: return p >= Rat(2, 3);
        default: {
            long double thr = path_threshold(n);
            long double pv = static_cast<long double>(rat_double(p));
            require(pv < thr - 1e-12L || pv > thr + 1e-12L, Err::below_validity_threshold,
                    "p inside the guard band of an irrational threshold");
            return pv > thr;
        }
    }
}

bool complete_piece_is_upper(int n, const Rat& p) {
    require(n >= 2, Err::invalid_size, "complete graph needs n >= 2");
    require(p >= 0 && p <= 1, Err::out_of_range, "p in [0,1]");
    switch (n) {
        case 2: return true;
        case 3: return p >= Rat(1, 3);
        case 4: return (p + 1) * (p + 1) >= 2;         // threshold sqrt2 - 1
        case 5: return p * p * 5 >= 1;                  // threshold 1/sqrt5
        case 6: return (p + 3) * (p + 3) >= 12;         // threshold 2 sqrt3 - 3
        default: {
            long double thr = complete_threshold(n);
            long double pv = static_cast<long double>(rat_double(p));
            require(pv < thr - 1e-12L || pv > thr + 1e-12L, Err::below_validity_threshold,
                    "p inside the guard band of an irrational threshold");
            return pv > thr;
        }
    }
}

Rat f_path_exact(int n, const Rat& p) {
    if (!path_piece_is_upper(n, p)) return 0;
    return path_gn_values(n, p)[static_cast<size_t>(n)];
}

Rat f_complete_exact(int n, const Rat& p) {
    if (!complete_piece_is_upper(n, p)) return 0;
    return complete_sn_values(n, p)[static_cast<size_t>(n)];
}

Rat f_c4_exact(const Rat& p) {
    require(p >= 0 && p <= 1, Err::out_of_range, "p in [0,1]");
    return p >= Rat(1, 2) ? Rat(2 * p - 1) : Rat(0);
}

Rat f_c5_exact(const Rat& p) {
    require(p >= 0 && p <= 1, Err::out_of_range, "p in [0,1]");
    if (3 * p * p < 1) return 0;
    return p * (3 * p * p - 1) / (3 * p - 1);
}

Rat F_path_exact(int n, const Rat& p) {
    require(n >= 2, Err::invalid_size, "path needs n >= 2");
    require(p >= 0 && p <= 1, Err::out_of_range, "p in [0,1]");
    return rat_pow(p, static_cast<unsigned long>(n / 2));
}

Rat F_complete_exact(int n, const Rat& p) { return 1 - f_complete_exact(n, 1 - p); }

Rat F_c4_exact(const Rat& p) {
    require(p >= 0 && p <= 1, Err::out_of_range, "p in [0,1]");
    return std::min(Rat(2 * p * p), Rat(2 * p - p * p));
}

Rat F_c5_exact(const Rat& p) {
    require(p >= 0 && p <= 1, Err::out_of_range, "p in [0,1]");
    if (p < Rat(1, 2)) return 5 * p * p * (p + 1) / (p + 4);
    if (p < Rat(3, 5)) return 5 * p * p / 3;
    return p * (2 - 5 * p * (1 - p)) / (5 - 3 * p);
}

Theorem41Result theorem41_bound(const Rat& f_value, int fiber_vertices, const Rat& p,
                                const Rat& alpha, int ell) {
    require(alpha > 0 && 2 * alpha <= 1, Err::out_of_range, "alpha in (0, 1/2]");
    require(ell >= 1, Err::invalid_size, "ell >= 1");
    require(fiber_vertices >= 1, Err::invalid_size, "fiber has at least one vertex");
    require(p >= 0 && p <= 1, Err::out_of_range, "p in [0,1]");
    require(f_value >= 0 && f_value <= 1, Err::out_of_range, "f in [0,1]");
    Theorem41Result out;
    Rat qv = rat_pow(1 - p, static_cast<unsigned long>(fiber_vertices));
    out.verified = f_value * f_value * alpha * (1 - alpha) >= qv;
    Rat x(0);
    out.x_trace.push_back(x);
    for (int k = 1; k <= ell; ++k) {
        if (f_value > x) {
            out.y_trace.push_back((1 - f_value) / (1 - x));
            x = qv / (f_value - x);
            if (out.verified)
                require(x <= alpha * f_value, Err::internal, "inductive cap x_n <= alpha f failed");
            out.x_trace.push_back(x);
        } else {
            break; // recursion leaves the valid regime; only possible unverified
        }
    }
    if (out.verified) out.bound = rat_pow((1 - alpha) * f_value, static_cast<unsigned long>(ell));
    return out;
}

double p_star(const std::function<double(double)>& f, int fiber_vertices) {
    auto h = [&](long double p) {
        long double fv = f(static_cast<double>(p));
        return fv * fv - 4.0L * std::pow(1.0L - p, static_cast<long double>(fiber_vertices));
    };
    long double lo = 0.0L, hi = 1.0L;
    require(h(lo) < 0 && h(hi) > 0, Err::no_sign_change, "f(p)^2 - 4(1-p)^v has no sign change");
    for (int it = 0; it < 200 && hi - lo > 1e-14L; ++it) {
        long double mid = (lo + hi) / 2;
        if (h(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    return static_cast<double>((lo + hi) / 2);
}

double p_star_curve(const ClosedFormCurve& curve) {
    return p_star([&](double p) { return curve.eval(p); }, curve.fiber_vertex_count());
}

std::vector<PStarEntry> theorem15_table(int max_complete_n) {
    std::vector<PStarEntry> out;
    out.push_back({"K1", p_star_curve({ClosedFormCurve::Family::f_point, 0})});
    out.push_back({"P2", p_star_curve({ClosedFormCurve::Family::f_path, 2})});
    out.push_back({"C4", p_star_curve({ClosedFormCurve::Family::f_c4, 0})});
    out.push_back({"C5", p_star_curve({ClosedFormCurve::Family::f_c5, 0})});
    for (int n = 2; n <= max_complete_n; ++n)
        out.push_back({"K" + std::to_string(n), p_star_curve({ClosedFormCurve::Family::f_complete, n})});
    return out;
}

std::pair<double, double> lattice_lower_bounds(double theta_site) {
    require(theta_site >= 0 && theta_site <= 1, Err::out_of_range, "theta in [0,1]");
    double newman = theta_site * theta_site + (1 - theta_site) * (1 - theta_site);
    double thm12 = theta_site * theta_site + (1 - theta_site) / 2;
    return {newman, thm12};
}

Rat k_indep_line_threshold(int k) {
    require(k >= 0, Err::invalid_size, "k >= 0");
    Rat kk = rat_pow(Rat(k), static_cast<unsigned long>(k)); // 0^0 = 1
    Rat k1 = rat_pow(Rat(k + 1), static_cast<unsigned long>(k + 1));
    return 1 - kk / k1;
}

} // namespace perco
