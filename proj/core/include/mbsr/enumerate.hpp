#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "mbsr/graph.hpp"

namespace mbsr {

using Rng = std::mt19937_64;

/// Visits all 2^(n(n-1)/2) labeled graphs on n vertices (n <= 8); stops
/// early when `visit` returns false.
void for_each_labeled_graph(int n, const std::function<bool(const Graph&)>& visit);
/// Same, restricted to connected graphs.
void for_each_connected_graph(int n, const std::function<bool(const Graph&)>& visit);

/// Uniform labeled graph G(n, 1/2) conditioned on being connected (rejection).
Graph random_connected_graph(int n, Rng& rng);
/// Uniform labeled tree via a random Prüfer sequence.
Graph random_tree(int n, Rng& rng);

}  // namespace mbsr
