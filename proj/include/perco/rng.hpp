#pragma once

#include <cstdint>

namespace perco {

// Counter-based generator: every draw is keyed by (seed, trial, coordinates,
// stream), so results do not depend on iteration order and trials can run
// concurrently.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t keyed_bits(std::uint64_t seed, std::uint64_t trial, std::int64_t x,
                                std::int64_t y, std::uint64_t stream) {
    std::uint64_t h = mix64(seed ^ 0x243f6a8885a308d3ULL);
    h = mix64(h ^ trial);
    h = mix64(h ^ static_cast<std::uint64_t>(x + 0x10000));
    h = mix64(h ^ static_cast<std::uint64_t>(y + 0x10000));
    h = mix64(h ^ stream);
    return h;
}

inline double uniform01(std::uint64_t seed, std::uint64_t trial, std::int64_t x, std::int64_t y,
                        std::uint64_t stream) {
    return static_cast<double>(keyed_bits(seed, trial, x, y, stream) >> 11) * 0x1.0p-53;
}

} // namespace perco
