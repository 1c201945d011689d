#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mbsr {

using Vertex = int;
/// Vertex subset of a graph with at most 64 vertices, bit v set iff v is a member.
using Mask = std::uint64_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    /// Same edge with endpoints ordered u < v.
    Edge normalized() const { return u < v ? Edge{u, v} : Edge{v, u}; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Construction validates the edge list (endpoints in range, no loops, no
/// duplicates in either orientation) and throws PreconditionError otherwise.
/// Adjacency is kept both as sorted neighbor lists and as a dense matrix so
/// that the exact searches can query edges in O(1). Graphs with n <= 64 also
/// carry neighbor bitmasks.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : Graph(n, std::span<const Edge>{}) {}
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }
    bool empty() const noexcept { return n_ == 0; }

    bool adjacent(Vertex u, Vertex v) const {
        return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
    }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    /// Edges with u < v in lexicographic order.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Open-neighborhood mask; requires order() <= 64.
    Mask neighbor_mask(Vertex v) const { return masks_.at(v); }
    /// Closed-neighborhood mask; requires order() <= 64.
    Mask closed_mask(Vertex v) const { return masks_.at(v) | (Mask{1} << v); }
    bool has_masks() const noexcept { return !masks_.empty() || n_ == 0; }

    /// Optional per-vertex labels (empty when unset).
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    Graph with_labels(std::vector<std::string> labels) const;

    /// Equality of vertex count and labeled edge set; labels are ignored.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint8_t> matrix_;
    std::vector<Mask> masks_;
    std::vector<std::string> labels_;
};

/// Sorted vertex list of a mask.
std::vector<Vertex> mask_to_vertices(Mask m);
/// Mask of a vertex list; all entries must be < 64.
Mask vertices_to_mask(std::span<const Vertex> vs);

}  // namespace mbsr
