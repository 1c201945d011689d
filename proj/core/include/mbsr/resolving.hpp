#pragma once

#include <span>
#include <vector>

#include "mbsr/distance.hpp"
#include "mbsr/graph.hpp"
#include "mbsr/limits.hpp"

namespace mbsr {

/// Minimum size of some vertex family together with one optimal member.
struct SizedWitness {
    int size = 0;
    std::vector<Vertex> witness;
};

/// Strong resolving graph G_SR: MMD pairs as edges, restricted to vertices
/// that are MMD with at least one other vertex.
struct SrGraph {
    Graph core;
    std::vector<Vertex> to_parent;  // core vertex -> vertex of G, increasing
    int parent_n = 0;

    /// Core index of a parent vertex, or -1 when it is not in V(G_SR).
    int core_vertex(Vertex parent) const;
    /// Parent vertices of a core vertex list.
    std::vector<Vertex> to_parent_vertices(std::span<const Vertex> core_vertices) const;
};

enum class TwinKind { Singleton, Adjacent, NonAdjacent };

struct TwinBlock {
    std::vector<Vertex> members;  // sorted
    TwinKind kind = TwinKind::Singleton;
};

/// Partition of V(G) into twin classes, ordered by smallest member.
struct TwinPartition {
    std::vector<TwinBlock> blocks;

    int block_of(Vertex v) const;
    int non_singleton_count() const;
};

/// (d(v,s_1), ..., d(v,s_k)). Throws PreconditionError on a disconnected graph.
std::vector<int> metric_code(const Graph& g, const DistanceMatrix& d, std::span<const Vertex> s,
                             Vertex v);

bool is_resolving_set(const Graph& g, std::span<const Vertex> s);
/// Mask form over a precomputed connected distance matrix (order <= 64).
bool resolves(const DistanceMatrix& d, Mask s);

/// dim(G) by subset search in order of size, starting at the twin lower bound
/// sum(|block| - 1). Throws LimitExceeded above `limit` vertices.
SizedWitness metric_dimension(const Graph& g, int limit = kDefaultLimits.metric_dimension);

/// d(a,mid) + d(mid,b) == d(a,b). Throws PreconditionError for unreachable pairs.
bool lies_on_geodesic(const DistanceMatrix& d, Vertex a, Vertex mid, Vertex b);

bool is_strong_resolving_set(const Graph& g, std::span<const Vertex> s);
bool strongly_resolves(const DistanceMatrix& d, Mask s);

/// d(u,v) >= d(w,v) for every neighbor w of u.
bool is_maximally_distant(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v);
/// u MMD v. Defined for any pair in a common component.
bool mutually_maximally_distant(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v);

/// Requires a connected graph of order >= 2.
SrGraph strong_resolving_graph(const Graph& g);
/// SR graph from its edge list in parent ids (duplicates and orientation ignored).
SrGraph make_sr_graph(int parent_n, std::vector<Edge> pairs);
SrGraph strong_resolving_graph(const Graph& g, const DistanceMatrix& d);

/// sdim(G) = tau(G_SR); the witness is expressed in vertices of G and is
/// re-checked with is_strong_resolving_set.
SizedWitness strong_metric_dimension(const Graph& g, int limit = kDefaultLimits.vertex_cover);

bool are_twins(const Graph& g, Vertex u, Vertex w);
TwinPartition twin_partition(const Graph& g);

/// Largest clique with no two members twins in G.
int twin_free_clique_number(const Graph& g, int limit = kDefaultLimits.clique);

/// Vertices realizing the diameter against some vertex. Connected graphs only.
std::vector<Vertex> boundary_vertices(const Graph& g);

}  // namespace mbsr
