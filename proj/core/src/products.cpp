#include "mbsr/products.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "mbsr/distance.hpp"
#include "mbsr/error.hpp"

namespace mbsr {

namespace {

void require_nonempty(const Graph& g, const Graph& h, const char* what) {
    if (g.empty() || h.empty())
        throw PreconditionError(std::string(what) + ": factors must be nonempty");
}

template <class Adjacent>
Graph pair_product(const Graph& g, const Graph& h, Adjacent adjacent) {
    const int n = g.order();
    const int m = h.order();
    std::vector<Edge> edges;
    for (Vertex x = 0; x < n * m; ++x)
        for (Vertex y = x + 1; y < n * m; ++y) {
            const auto [u, w] = product_factors(x, m);
            const auto [u2, w2] = product_factors(y, m);
            if (adjacent(u, w, u2, w2))
                edges.push_back({x, y});
        }
    return Graph(n * m, edges);
}

// Closed-neighborhood equality without masks, so it works for any order.
bool same_closed_neighborhood(const Graph& g, Vertex u, Vertex v) {
    if (u == v)
        return true;
    if (!g.adjacent(u, v))
        return false;
    for (Vertex x = 0; x < g.order(); ++x)
        if (x != u && x != v && g.adjacent(u, x) != g.adjacent(v, x))
            return false;
    return true;
}

}  // namespace

Graph corona(const Graph& g, const Graph& h) {
    if (g.empty())
        throw PreconditionError("corona: G must be nonempty");
    const int n = g.order();
    const int m = h.order();
    std::vector<Edge> edges(g.edges());
    for (Vertex u = 0; u < n; ++u) {
        const Vertex base = n + u * m;
        for (const Edge& e : h.edges())
            edges.push_back({base + e.u, base + e.v});
        for (Vertex j = 0; j < m; ++j)
            edges.push_back({u, base + j});
    }
    return Graph(n + n * m, edges);
}

Graph join(const Graph& g, const Graph& h) {
    const int n = g.order();
    std::vector<Edge> edges(g.edges());
    for (const Edge& e : h.edges())
        edges.push_back({n + e.u, n + e.v});
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w = 0; w < h.order(); ++w)
            edges.push_back({u, n + w});
    return Graph(n + h.order(), edges);
}

Graph cartesian(const Graph& g, const Graph& h) {
    require_nonempty(g, h, "cartesian");
    return pair_product(g, h, [&](Vertex u, Vertex w, Vertex u2, Vertex w2) {
        return (u == u2 && h.adjacent(w, w2)) || (w == w2 && g.adjacent(u, u2));
    });
}

Graph direct(const Graph& g, const Graph& h) {
    require_nonempty(g, h, "direct");
    return pair_product(g, h, [&](Vertex u, Vertex w, Vertex u2, Vertex w2) {
        return g.adjacent(u, u2) && h.adjacent(w, w2);
    });
}

Graph lexicographic(const Graph& g, const Graph& h) {
    require_nonempty(g, h, "lexicographic");
    return pair_product(g, h, [&](Vertex u, Vertex w, Vertex u2, Vertex w2) {
        return g.adjacent(u, u2) || (u == u2 && h.adjacent(w, w2));
    });
}

Graph modular(const Graph& g, const Graph& h) {
    require_nonempty(g, h, "modular");
    return pair_product(g, h, [&](Vertex u, Vertex w, Vertex u2, Vertex w2) {
        if (u == u2)
            return h.adjacent(w, w2);
        if (w == w2)
            return g.adjacent(u, u2);
        return g.adjacent(u, u2) == h.adjacent(w, w2);
    });
}

bool is_complete(const Graph& g) {
    const long long n = g.order();
    return g.size() == n * (n - 1) / 2;
}

bool is_two_clique_union(const Graph& g) {
    const auto comps = connected_components(g);
    if (comps.size() != 2)
        return false;
    long long clique_edges = 0;
    for (const auto& c : comps) {
        const long long k = static_cast<long long>(c.size());
        clique_edges += k * (k - 1) / 2;
    }
    return clique_edges == g.size();
}

std::vector<Vertex> universal_vertices(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1)
            out.push_back(v);
    return out;
}

bool closed_twins(const Graph& g, Vertex u, Vertex v) {
    return u != v && same_closed_neighborhood(g, u, v);
}

int domination_number(const Graph& g, int limit) {
    const int n = g.order();
    if (n > limit)
        throw LimitExceeded("domination number limited to " + std::to_string(limit) + " vertices");
    if (n == 0)
        return 0;
    const Mask all = (Mask{1} << n) - 1;
    // Greedy upper bound: repeatedly take the vertex dominating most new vertices.
    int upper = 0;
    for (Mask dominated = 0; dominated != all; ++upper) {
        Vertex best = 0;
        int gain = -1;
        for (Vertex v = 0; v < n; ++v) {
            const int c = std::popcount(g.closed_mask(v) & ~dominated);
            if (c > gain) {
                gain = c;
                best = v;
            }
        }
        dominated |= g.closed_mask(best);
    }
    for (int k = 1; k < upper; ++k) {
        for (Mask s = (Mask{1} << k) - 1; s <= all; ) {
            Mask dominated = 0;
            for (Mask r = s; r; r &= r - 1)
                dominated |= g.closed_mask(std::countr_zero(r));
            if (dominated == all)
                return k;
            const Mask low = s & -s;  // Gosper's hack
            const Mask ripple = s + low;
            s = (((ripple ^ s) >> 2) / low) | ripple;
        }
    }
    return upper;
}

bool GammaPairSet::contains(Vertex u, Vertex w) const {
    const auto key = std::minmax(u, w);
    return std::binary_search(pairs.begin(), pairs.end(), std::pair<Vertex, Vertex>(key.first, key.second));
}

std::vector<Vertex> GammaPairSet::members() const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < member.size(); ++v)
        if (member[v])
            out.push_back(static_cast<Vertex>(v));
    return out;
}

GammaPairSet gamma_pairs(const Graph& g, int limit) {
    const int n = g.order();
    GammaPairSet out;
    out.member.assign(n, false);
    if (n < 2 || domination_number(g, limit) != 2)
        return out;
    const Mask all = (Mask{1} << n) - 1;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w = u + 1; w < n; ++w) {
            const Mask a = g.closed_mask(u);
            const Mask b = g.closed_mask(w);
            if ((a & b) == 0 && (a | b) == all) {
                out.pairs.emplace_back(u, w);
                out.member[u] = out.member[w] = true;
            }
        }
    return out;
}

Graph gp_graph(const Graph& g, const GammaPairSet& pairs) {
    std::vector<Edge> edges;
    for (auto [u, w] : pairs.pairs)
        edges.push_back({u, w});
    return Graph(g.order(), edges);
}

Graph gp_graph(const Graph& g, int limit) {
    return gp_graph(g, gamma_pairs(g, limit));
}

std::vector<Edge> twin_edges(const Graph& g) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (same_closed_neighborhood(g, e.u, e.v))
            out.push_back(e);
    return out;
}

}  // namespace mbsr
