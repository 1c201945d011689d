#pragma once

#include "mbsr/graph.hpp"
#include "mbsr/limits.hpp"
#include "mbsr/resolving.hpp"

namespace mbsr {

/// Exact minimum vertex cover by branch-and-bound on vertex masks.
///
/// Reductions: isolated vertices are dropped; a degree-1 vertex forces its
/// neighbor into the cover. Branching picks a maximum-degree vertex (lowest id
/// on ties) and either takes it or takes all its neighbors. A greedy maximal
/// matching bounds the remainder from below.
SizedWitness min_vertex_cover(const Graph& g, int limit = kDefaultLimits.vertex_cover);

/// Every edge has an endpoint in `cover`.
bool is_vertex_cover(const Graph& g, Mask cover);

}  // namespace mbsr
