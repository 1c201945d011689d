#include "mbsr/graph.hpp"

#include <algorithm>
#include <bit>

#include "mbsr/error.hpp"

namespace mbsr {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 0)
        throw PreconditionError("negative vertex count");
    adj_.resize(n);
    matrix_.assign(static_cast<std::size_t>(n) * n, 0);
    edges_.reserve(edges.size());
    for (const Edge& raw : edges) {
        if (raw.u < 0 || raw.v < 0 || raw.u >= n || raw.v >= n)
            throw PreconditionError("edge endpoint out of range: " + std::to_string(raw.u) + " " +
                                    std::to_string(raw.v));
        if (raw.u == raw.v)
            throw PreconditionError("self-loop at vertex " + std::to_string(raw.u));
        auto& cell = matrix_[static_cast<std::size_t>(raw.u) * n + raw.v];
        if (cell)
            throw PreconditionError("duplicate edge " + std::to_string(raw.u) + " " +
                                    std::to_string(raw.v));
        cell = 1;
        matrix_[static_cast<std::size_t>(raw.v) * n + raw.u] = 1;
        adj_[raw.u].push_back(raw.v);
        adj_[raw.v].push_back(raw.u);
        edges_.push_back(raw.normalized());
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto& list : adj_)
        std::sort(list.begin(), list.end());
    if (n <= 64) {
        masks_.assign(n, 0);
        for (const Edge& e : edges_) {
            masks_[e.u] |= Mask{1} << e.v;
            masks_[e.v] |= Mask{1} << e.u;
        }
    }
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& list : adj_)
        best = std::max(best, static_cast<int>(list.size()));
    return best;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw PreconditionError("label count does not match vertex count");
    Graph copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
}

std::vector<Vertex> mask_to_vertices(Mask m) {
    std::vector<Vertex> out;
    out.reserve(std::popcount(m));
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

Mask vertices_to_mask(std::span<const Vertex> vs) {
    Mask m = 0;
    for (Vertex v : vs) {
        if (v < 0 || v >= 64)
            throw PreconditionError("vertex does not fit a 64-bit mask: " + std::to_string(v));
        m |= Mask{1} << v;
    }
    return m;
}

}  // namespace mbsr
