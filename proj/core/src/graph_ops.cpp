#include "mbsr/graph_ops.hpp"

#include <algorithm>

#include "mbsr/error.hpp"

namespace mbsr {

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    const int n = g.order();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                edges.push_back({u, v});
    return Graph(n, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<Vertex> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionError("induced_subgraph: repeated vertex");
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        Vertex v = sorted[i];
        if (v < 0 || v >= g.order())
            throw PreconditionError("induced_subgraph: vertex out of range: " + std::to_string(v));
        index[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (index[e.u] >= 0 && index[e.v] >= 0)
            edges.push_back({index[e.u], index[e.v]});
    InducedSubgraph out{Graph(static_cast<int>(sorted.size()), edges), std::move(sorted)};
    if (!g.labels().empty()) {
        std::vector<std::string> labels;
        for (Vertex v : out.to_parent)
            labels.push_back(g.labels()[v]);
        out.graph = out.graph.with_labels(std::move(labels));
    }
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    const int shift = a.order();
    for (const Edge& e : b.edges())
        edges.push_back({e.u + shift, e.v + shift});
    return Graph(a.order() + b.order(), edges);
}

Graph disjoint_copies(const Graph& g, int k) {
    Graph out;
    for (int i = 0; i < k; ++i)
        out = disjoint_union(out, g);
    return out;
}

}  // namespace mbsr
