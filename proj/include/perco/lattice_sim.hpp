#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "perco/rational.hpp"

namespace perco {

struct WindowConfig {
    int dimension = 2; // only d = 2 windows are rendered
    int radius = 8;    // window is the l-infinity ball [-R..R]^2
    std::uint64_t seed = 1;
    int trials = 100;
};

struct CertificateStat {
    std::string name;
    long checks = 0;
    long violations = 0;
};

// Aggregated output of a sampler. Certificates are per-sample facts that must
// hold deterministically; their violation counts must stay at zero.
struct SampleStats {
    WindowConfig config;
    std::vector<std::array<int, 3>> edges; // (x, y, dir): dir 0 = right, 1 = up
    std::vector<long> edge_open_count;
    std::vector<double> edge_exact_marginal;
    std::vector<CertificateStat> certificates;
    std::map<int, long> component_histogram; // open-component size -> count over samples
    double min_exact_marginal = 1.0;
    long marginal_flagged_edges = 0; // edges with |freq - exact| > 4 sigma

    long total_violations() const {
        long v = 0;
        for (const auto& c : certificates) v += c.violations;
        return v;
    }
};

// Period-6 shell coloring of the l-infinity spheres around the origin with
// q = sqrt(3) - 1. Certifies per sample that no open path joins T_k to
// T_{k+3} for k = 0 mod 3, and that shells 0 mod 6 / 3 mod 6 are
// monochromatic. Needs R >= 7.
SampleStats sample_shell_construction(const WindowConfig& cfg);

// On/L/D states with probabilities (q, (1-q)/2, (1-q)/2); edges open between
// two On vertices, left of an L vertex and below a D vertex. Certifies the
// partial orientation (out-degree one for L/D, zero for On) and that every
// interior LD-section attaches to at most one On-section.
SampleStats sample_onld_construction(const WindowConfig& cfg, double q);

// Left-down measure with parameter t in [0, 1/2], sampled through its
// coupling with the 0-independent measure of density z = 1 - sqrt(1-2t).
// Certifies per sample that every open edge is open in the coupled
// configuration.
SampleStats sample_left_down(const WindowConfig& cfg, double t);

// Exact equality of the two left-down formulations on a 2x2 window, by full
// enumeration. Needs 1 - 2t to be a square of a rational.
struct LeftDownEquivalence {
    Rat t, z;
    bool equal = false;
    std::array<Rat, 16> vertex_dist{};  // distribution over the 4 window edges
    std::array<Rat, 16> coupled_dist{};
};
LeftDownEquivalence couple_left_down(const Rat& t);

// Tiled-ladder window: two horizontally shifted ladder blocks sharing a
// deterministically open rung. Certifies the block crossing probability is
// exactly zero (so components in the tiling have at most 4N-6 vertices) and
// optionally samples the tiled window to watch the bound hold.
struct LadderWindowReport {
    int block_columns = 0;      // N
    bool rung_deterministic = false;
    Rat block_crossing = 0;     // exact; must be 0
    int component_bound = 0;    // 4N - 6
    bool bound_certified = false;
    long samples = 0;
    long bound_violations = 0;
    int max_component_seen = 0;
};
LadderWindowReport ladder_window_check(const Rat& p, std::uint64_t seed = 1, int trials = 0);

} // namespace perco
