#include "mbsr/resolving.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "mbsr/error.hpp"
#include "mbsr/vertex_cover.hpp"

namespace mbsr {

namespace {

void require_connected(const DistanceMatrix& d, const char* op) {
    if (!d.connected())
        throw PreconditionError(std::string(op) + ": graph must be connected");
}

void require_vertex(const Graph& g, Vertex v, const char* op) {
    if (v < 0 || v >= g.order())
        throw PreconditionError(std::string(op) + ": vertex out of range: " + std::to_string(v));
}

Mask checked_mask(const Graph& g, std::span<const Vertex> s, const char* op) {
    if (g.order() > kMaskBits)
        throw LimitExceeded(std::string(op) + ": graphs above 64 vertices are not supported");
    for (Vertex v : s)
        require_vertex(g, v, op);
    return vertices_to_mask(s);
}

// Next subset of the same popcount in increasing numeric order (Gosper's hack).
Mask next_combination(Mask x) {
    const Mask c = x & (~x + 1);
    const Mask r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

int SrGraph::core_vertex(Vertex parent) const {
    auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
    return (it != to_parent.end() && *it == parent) ? static_cast<int>(it - to_parent.begin()) : -1;
}

std::vector<Vertex> SrGraph::to_parent_vertices(std::span<const Vertex> core_vertices) const {
    std::vector<Vertex> out;
    for (Vertex c : core_vertices)
        out.push_back(to_parent.at(c));
    std::sort(out.begin(), out.end());
    return out;
}

int TwinPartition::block_of(Vertex v) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (std::binary_search(blocks[i].members.begin(), blocks[i].members.end(), v))
            return static_cast<int>(i);
    return -1;
}

int TwinPartition::non_singleton_count() const {
    return static_cast<int>(std::count_if(blocks.begin(), blocks.end(),
                                          [](const TwinBlock& b) { return b.members.size() > 1; }));
}

std::vector<int> metric_code(const Graph& g, const DistanceMatrix& d, std::span<const Vertex> s,
                             Vertex v) {
    require_connected(d, "metric_code");
    if (s.empty())
        throw PreconditionError("metric_code: empty vertex list");
    require_vertex(g, v, "metric_code");
    std::vector<int> code;
    code.reserve(s.size());
    for (Vertex u : s) {
        require_vertex(g, u, "metric_code");
        code.push_back(d(v, u));
    }
    return code;
}

bool resolves(const DistanceMatrix& d, Mask s) {
    const int n = d.order();
    const std::vector<Vertex> members = mask_to_vertices(s);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            bool split = false;
            for (Vertex z : members)
                if (d(x, z) != d(y, z)) {
                    split = true;
                    break;
                }
            if (!split)
                return false;
        }
    return true;
}

bool is_resolving_set(const Graph& g, std::span<const Vertex> s) {
    const Mask m = checked_mask(g, s, "is_resolving_set");
    const DistanceMatrix d = all_pairs_distances(g);
    require_connected(d, "is_resolving_set");
    return resolves(d, m);
}

SizedWitness metric_dimension(const Graph& g, int limit) {
    const int n = g.order();
    if (n > limit || n >= kMaskBits)
        throw LimitExceeded("metric_dimension limited to " + std::to_string(limit) + " vertices, got " +
                            std::to_string(n));
    if (n < 2)
        throw PreconditionError("metric_dimension: order must be at least 2");
    const DistanceMatrix d = all_pairs_distances(g);
    require_connected(d, "metric_dimension");

    // Any resolving set misses at most one vertex of each twin class.
    const TwinPartition twins = twin_partition(g);
    std::vector<Mask> blocks;
    int lower = 0;
    for (const auto& b : twins.blocks)
        if (b.members.size() > 1) {
            blocks.push_back(vertices_to_mask(b.members));
            lower += static_cast<int>(b.members.size()) - 1;
        }
    auto twin_ok = [&blocks](Mask s) {
        for (Mask b : blocks)
            if (std::popcount(b & ~s) > 1)
                return false;
        return true;
    };

    const Mask full = (Mask{1} << n) - 1;
    for (int k = std::max(1, lower); k <= n; ++k)
        for (Mask s = (Mask{1} << k) - 1; s <= full; s = next_combination(s))
            if (twin_ok(s) && resolves(d, s))
                return {k, mask_to_vertices(s)};
    throw std::logic_error("metric_dimension: V(G) failed to resolve");
}

bool lies_on_geodesic(const DistanceMatrix& d, Vertex a, Vertex mid, Vertex b) {
    if (!d.reachable(a, mid) || !d.reachable(mid, b) || !d.reachable(a, b))
        throw PreconditionError("lies_on_geodesic: unreachable pair");
    return d(a, mid) + d(mid, b) == d(a, b);
}

bool strongly_resolves(const DistanceMatrix& d, Mask s) {
    const int n = d.order();
    const std::vector<Vertex> members = mask_to_vertices(s);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            const int dxy = d(x, y);
            bool ok = false;
            for (Vertex z : members) {
                // x on a y-z geodesic, or y on an x-z geodesic.
                if (d(y, z) == dxy + d(x, z) || d(x, z) == dxy + d(y, z)) {
                    ok = true;
                    break;
                }
            }
            if (!ok)
                return false;
        }
    return true;
}

bool is_strong_resolving_set(const Graph& g, std::span<const Vertex> s) {
    const Mask m = checked_mask(g, s, "is_strong_resolving_set");
    const DistanceMatrix d = all_pairs_distances(g);
    require_connected(d, "is_strong_resolving_set");
    return strongly_resolves(d, m);
}

bool is_maximally_distant(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v) {
    require_vertex(g, u, "is_maximally_distant");
    require_vertex(g, v, "is_maximally_distant");
    if (!d.reachable(u, v))
        throw PreconditionError("is_maximally_distant: vertices in different components");
    const int duv = d(u, v);
    for (Vertex w : g.neighbors(u))
        if (d(w, v) > duv)
            return false;
    return true;
}

bool mutually_maximally_distant(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v) {
    return u != v && is_maximally_distant(g, d, u, v) && is_maximally_distant(g, d, v, u);
}

SrGraph make_sr_graph(int parent_n, std::vector<Edge> pairs) {
    std::vector<int> index(parent_n, -1);
    for (Edge& e : pairs) {
        e = e.normalized();
        index[e.u] = index[e.v] = 0;
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    SrGraph sr;
    sr.parent_n = parent_n;
    for (Vertex v = 0; v < parent_n; ++v)
        if (index[v] == 0) {
            index[v] = static_cast<int>(sr.to_parent.size());
            sr.to_parent.push_back(v);
        }
    for (Edge& e : pairs)
        e = {index[e.u], index[e.v]};
    sr.core = Graph(static_cast<int>(sr.to_parent.size()), pairs);
    return sr;
}

SrGraph strong_resolving_graph(const Graph& g, const DistanceMatrix& d) {
    const int n = g.order();
    if (n < 2)
        throw PreconditionError("strong_resolving_graph: order must be at least 2");
    require_connected(d, "strong_resolving_graph");
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (mutually_maximally_distant(g, d, u, v))
                pairs.push_back({u, v});
    return make_sr_graph(n, std::move(pairs));
}

SrGraph strong_resolving_graph(const Graph& g) {
    return strong_resolving_graph(g, all_pairs_distances(g));
}

SizedWitness strong_metric_dimension(const Graph& g, int limit) {
    const SrGraph sr = strong_resolving_graph(g);
    SizedWitness cover = min_vertex_cover(sr.core, limit);
    SizedWitness out{cover.size, sr.to_parent_vertices(cover.witness)};
    if (g.order() <= kMaskBits && !strongly_resolves(all_pairs_distances(g), vertices_to_mask(out.witness)))
        throw std::logic_error("strong_metric_dimension: witness is not a strong resolving set");
    return out;
}

bool are_twins(const Graph& g, Vertex u, Vertex w) {
    if (u == w)
        return false;
    // N(u) - {w} == N(w) - {u}
    for (Vertex x = 0; x < g.order(); ++x) {
        if (x == u || x == w)
            continue;
        if (g.adjacent(u, x) != g.adjacent(w, x))
            return false;
    }
    return true;
}

TwinPartition twin_partition(const Graph& g) {
    TwinPartition out;
    for (Vertex v = 0; v < g.order(); ++v) {
        bool placed = false;
        for (auto& b : out.blocks)
            if (are_twins(g, b.members.front(), v)) {
                b.members.push_back(v);
                placed = true;
                break;
            }
        if (!placed)
            out.blocks.push_back({{v}, TwinKind::Singleton});
    }
    for (auto& b : out.blocks)
        if (b.members.size() > 1)
            b.kind = g.adjacent(b.members[0], b.members[1]) ? TwinKind::Adjacent : TwinKind::NonAdjacent;
    return out;
}

namespace {

// Max clique on mask adjacency, pruned by |current| + |candidates| <= best.
void grow_clique(const std::vector<Mask>& adj, Mask candidates, int size, int& best) {
    if (candidates == 0) {
        best = std::max(best, size);
        return;
    }
    while (candidates) {
        if (size + std::popcount(candidates) <= best)
            return;
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        grow_clique(adj, candidates & adj[v], size + 1, best);
    }
}

}  // namespace

int twin_free_clique_number(const Graph& g, int limit) {
    const int n = g.order();
    if (n > limit || n > kMaskBits)
        throw LimitExceeded("twin_free_clique_number limited to " + std::to_string(limit) +
                            " vertices, got " + std::to_string(n));
    // Twins inside a clique are adjacent twins; drop those edges and search
    // for a plain maximum clique.
    std::vector<Mask> adj(n, 0);
    for (const Edge& e : g.edges())
        if (!are_twins(g, e.u, e.v)) {
            adj[e.u] |= Mask{1} << e.v;
            adj[e.v] |= Mask{1} << e.u;
        }
    int best = 0;
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    grow_clique(adj, all, 0, best);
    return best;
}

std::vector<Vertex> boundary_vertices(const Graph& g) {
    const DistanceMatrix d = all_pairs_distances(g);
    require_connected(d, "boundary_vertices");
    const int diam = d.diameter();
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (d.eccentricity(v) == diam)
            out.push_back(v);
    return out;
}

}  // namespace mbsr
