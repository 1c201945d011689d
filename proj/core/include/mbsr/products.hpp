#pragma once

#include <utility>
#include <vector>

#include "mbsr/graph.hpp"
#include "mbsr/limits.hpp"

namespace mbsr {

// Product vertices use row-major encoding: (u, w) -> u * |V(H)| + w.
constexpr Vertex product_vertex(Vertex u, Vertex w, int h_order) { return u * h_order + w; }
constexpr std::pair<Vertex, Vertex> product_factors(Vertex x, int h_order) {
    return {x / h_order, x % h_order};
}

/// G ⊙ H. Vertex u of G keeps id u; vertex j of the copy attached to u is
/// n + u * m + j.
Graph corona(const Graph& g, const Graph& h);
/// G + H: disjoint union plus all G-H edges; H's vertices are shifted by |V(G)|.
Graph join(const Graph& g, const Graph& h);

Graph cartesian(const Graph& g, const Graph& h);
Graph direct(const Graph& g, const Graph& h);
Graph lexicographic(const Graph& g, const Graph& h);
/// E(G □ H) ∪ E(G × H) ∪ E(Ḡ × H̄).
Graph modular(const Graph& g, const Graph& h);

bool is_complete(const Graph& g);
/// Exactly two connected components, each a clique.
bool is_two_clique_union(const Graph& g);
/// Vertices with N[v] = V(G).
std::vector<Vertex> universal_vertices(const Graph& g);
/// Closed-neighborhood twins: N[u] = N[v], u != v.
bool closed_twins(const Graph& g, Vertex u, Vertex v);

/// Exact domination number; greedy bound, then subset search by size.
int domination_number(const Graph& g, int limit = kDefaultLimits.domination);

/// γ-pairs {u, w} (u < w): N[u] ∩ N[w] = ∅, N[u] ∪ N[w] = V and γ(G) = 2.
struct GammaPairSet {
    std::vector<std::pair<Vertex, Vertex>> pairs;  // sorted
    std::vector<bool> member;                      // P(G) as indicator

    bool contains(Vertex u, Vertex w) const;
    bool in_some_pair(Vertex v) const { return member[v]; }
    std::vector<Vertex> members() const;
};

GammaPairSet gamma_pairs(const Graph& g, int limit = kDefaultLimits.domination);
/// GP(G): the γ-pairs as a graph on V(G).
Graph gp_graph(const Graph& g, int limit = kDefaultLimits.domination);
Graph gp_graph(const Graph& g, const GammaPairSet& pairs);

/// TW(G): edges uv with N[u] = N[v].
std::vector<Edge> twin_edges(const Graph& g);

}  // namespace mbsr
