#pragma once

#include <vector>

#include "mbsr/graph.hpp"

namespace mbsr {

/// All-pairs hop distances. Pairs in different components hold kUnreachable.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> dist) : n_(n), dist_(std::move(dist)) {}

    int order() const noexcept { return n_; }
    int operator()(Vertex u, Vertex v) const {
        return dist_[static_cast<std::size_t>(u) * n_ + v];
    }
    bool reachable(Vertex u, Vertex v) const { return (*this)(u, v) != kUnreachable; }

    /// Largest finite entry (0 for graphs without edges).
    int diameter() const;
    /// Largest finite distance from v.
    int eccentricity(Vertex v) const;
    bool connected() const;

private:
    int n_ = 0;
    std::vector<int> dist_;
};

/// BFS from every vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

/// K1 counts as connected; K0 does not.
bool is_connected(const Graph& g);

/// Vertex lists of the connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace mbsr
