#pragma once

#include <map>
#include <span>
#include <vector>

#include "mbsr/graph.hpp"

namespace mbsr {

Graph empty_graph(int n);
/// P_n on 0..n-1 in path order. n >= 1.
Graph path(int n);
/// C_n on 0..n-1 in cycle order. n >= 3.
Graph cycle(int n);
Graph complete(int n);
/// K_{1,x}: center 0, leaves 1..x. x >= 1.
Graph star(int x);
/// Outer cycle 0-4, inner pentagram 5-9 (i+5 ~ (i+2)%5+5), spokes i ~ i+5.
Graph petersen();
/// Parts are consecutive id ranges in the given order; every size >= 1.
Graph complete_multipartite(std::span<const int> part_sizes);
/// Center 0 with paths of the given lengths; legs sorted longest first and
/// numbered leg by leg outward from the center.
Graph spider(std::vector<int> legs);
/// parents[v] is v's parent, -1 for the single root.
Graph tree_from_parents(std::span<const int> parents);

bool is_tree(const Graph& g);

struct TreeStats {
    int sigma = 0;                    // leaves
    int ex = 0;                       // exterior major vertices
    std::map<Vertex, int> terminal;   // ter(v) for each exterior major vertex v
};

/// Leaf count, exterior major vertices and terminal degrees of a tree of
/// order >= 2. A leaf is a terminal vertex of the major vertex strictly
/// closest to it.
TreeStats tree_stats(const Graph& t);

}  // namespace mbsr
