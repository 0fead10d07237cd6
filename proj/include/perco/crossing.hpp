#pragma once

#include "perco/measure.hpp"

namespace perco {

inline constexpr int kMaxFiberVertices = 3;
inline constexpr int kMaxFiberStates = 4;
inline constexpr int kMaxCrossingLength = 10000;

// Exact probability of an open left-right crossing of P_length x fiber under
// a vertex-based measure on the product graph (canonical vertex numbering:
// column x, fiber vertex u -> x*|V(fiber)| + u). A dynamic programme over
// columns carries, per column, the previous column's states plus the
// partition of its vertices by connectivity through everything to the left,
// each block flagged when it reaches the left face.
Rat exact_crossing_probability(const VertexBasedMeasure& vbm, int length,
                               const LabeledGraph& fiber);

} // namespace perco
