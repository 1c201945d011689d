#pragma once

#include <span>
#include <vector>

#include "mbsr/graph.hpp"

namespace mbsr {

Graph complement(const Graph& g);

/// G[keep], relabeled compactly in increasing order of the kept vertices.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;
};

/// Throws PreconditionError for out-of-range or repeated vertices.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// a's vertices keep their ids; b's are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// k disjoint copies of g.
Graph disjoint_copies(const Graph& g, int k);

}  // namespace mbsr
