#include "mbsr/modular_sr.hpp"

#include <algorithm>

#include "mbsr/error.hpp"

namespace mbsr {

namespace {

using EdgeList = std::vector<Edge>;

class Builder {
public:
    Builder(const ModularFactor& g, const ModularFactor& h) : g_(g), h_(h), m_(h.order()) {}

    int size() const { return g_.order() * m_; }
    ProductVertex split(Vertex x) const { return product_factors(x, m_); }
    Vertex join(ProductVertex p) const { return product_vertex(p.first, p.second, m_); }

    // Every unordered pair of product vertices.
    template <class Pred>
    void add_if(EdgeList& out, Pred pred) const {
        for (Vertex x = 0; x < size(); ++x)
            for (Vertex y = x + 1; y < size(); ++y)
                if (pred(split(x), split(y)))
                    out.push_back({x, y});
    }

private:
    const ModularFactor& g_;
    const ModularFactor& h_;
    int m_;
};

// Edge sets of factor products, restricted to kept factor vertices.
template <class AdjG, class AdjH, class KeepG, class KeepH>
bool cartesian_edge(ProductVertex a, ProductVertex b, AdjG adj_g, AdjH adj_h, KeepG keep_g,
                    KeepH keep_h) {
    if (!keep_g(a.first) || !keep_g(b.first) || !keep_h(a.second) || !keep_h(b.second))
        return false;
    return (a.first == b.first && adj_h(a.second, b.second)) ||
           (a.second == b.second && adj_g(a.first, b.first));
}

template <class AdjG, class AdjH, class KeepG, class KeepH>
bool direct_edge(ProductVertex a, ProductVertex b, AdjG adj_g, AdjH adj_h, KeepG keep_g,
                 KeepH keep_h) {
    if (!keep_g(a.first) || !keep_g(b.first) || !keep_h(a.second) || !keep_h(b.second))
        return false;
    return adj_g(a.first, b.first) && adj_h(a.second, b.second);
}

auto adjacency(const ModularFactor& f) {
    return [&f](Vertex u, Vertex v) { return u != v && f.graph->adjacent(u, v); };
}
auto non_adjacency(const ModularFactor& f) {
    return [&f](Vertex u, Vertex v) { return u != v && !f.graph->adjacent(u, v); };
}
auto gamma_adjacency(const ModularFactor& f) {
    return [&f](Vertex u, Vertex v) { return u != v && f.gamma.contains(u, v); };
}
constexpr auto keep_all = [](Vertex) { return true; };

bool one_sided_distance3(const ModularFactor& g, const ModularFactor& h, ProductVertex a,
                         ProductVertex b) {
    return g.same_closed(a.first, b.first) && h.at_least(a.second, b.second, 3) &&
           (g.universal[a.first] || h.gamma.contains(a.second, b.second));
}

// Clause (e) with g universal and g' not; (h, h') as in the statement.
bool clause_e(const ModularFactor& g, const ModularFactor& h, ProductVertex a, ProductVertex b) {
    if (!g.universal[a.first] || g.universal[b.first])
        return false;
    if (!h.dist.reachable(a.second, b.second) || h.dist(a.second, b.second) != 2)
        return false;
    if (h.gamma.in_some_pair(b.second))
        return false;
    auto close = [&](Vertex x) { return h.dist.reachable(a.second, x) && h.dist(a.second, x) <= 2; };
    if (!close(b.second))
        return false;
    for (Vertex x : h.graph->neighbors(b.second))
        if (!close(x))
            return false;
    return true;
}

bool clause_d(const ModularFactor& g, const ModularFactor& h, ProductVertex a, ProductVertex b) {
    if (!g.universal[a.first] || !g.universal[b.first])
        return false;
    if (!h.dist.reachable(a.second, b.second) || h.dist(a.second, b.second) != 2)
        return false;
    return mutually_maximally_distant(*h.graph, h.dist, a.second, b.second);
}

// Swap factor roles of a product vertex.
ProductVertex mirror(ProductVertex p) { return {p.second, p.first}; }

}  // namespace

ModularFactor::ModularFactor(const Graph& g)
    : graph(&g), dist(all_pairs_distances(g)), gamma(gamma_pairs(g)), universal(g.order(), false) {
    for (Vertex v : universal_vertices(g))
        universal[v] = true;
}

bool ModularFactor::same_closed(Vertex u, Vertex v) const {
    return u == v || closed_twins(*graph, u, v);
}

bool ModularFactor::at_least(Vertex u, Vertex v, int k) const {
    return !dist.reachable(u, v) || dist(u, v) >= k;
}

bool ModularFactor::has_universal() const {
    return std::find(universal.begin(), universal.end(), true) != universal.end();
}

bool adjacent_twins_modular(const ModularFactor& g, const ModularFactor& h, ProductVertex a,
                            ProductVertex b) {
    if (a == b)
        return false;
    if (g.same_closed(a.first, b.first) && h.same_closed(a.second, b.second))
        return true;
    return g.gamma.contains(a.first, b.first) && h.gamma.contains(a.second, b.second);
}

bool adjacent_twins_modular(const Graph& g, const Graph& h, ProductVertex a, ProductVertex b) {
    return adjacent_twins_modular(ModularFactor(g), ModularFactor(h), a, b);
}

bool modular_distance3(const ModularFactor& g, const ModularFactor& h, ProductVertex a,
                       ProductVertex b) {
    return one_sided_distance3(g, h, a, b) || one_sided_distance3(h, g, mirror(a), mirror(b));
}

bool modular_distance3(const Graph& g, const Graph& h, ProductVertex a, ProductVertex b) {
    return modular_distance3(ModularFactor(g), ModularFactor(h), a, b);
}

std::string_view to_string(ModularSrMethod m) {
    switch (m) {
        case ModularSrMethod::Diameter2: return "diameter-2";
        case ModularSrMethod::GammaPairFormula: return "gamma-pair";
        case ModularSrMethod::Clauses: return "clauses";
    }
    return "?";
}

int modular_sr_preconditions(const Graph& g, const Graph& h) {
    if (g.empty() || h.empty())
        throw PreconditionError("modular SR: factors must be nonempty");
    if (is_complete(g) || is_complete(h))
        throw PreconditionError("modular SR: a factor is complete");
    if (is_two_clique_union(g) && is_two_clique_union(h))
        throw PreconditionError("modular SR: both factors are unions of two cliques");
    const DistanceMatrix d = all_pairs_distances(modular(g, h));
    if (!d.connected())
        throw PreconditionError("modular SR: product is disconnected");
    const int diam = d.diameter();
    if (diam != 2 && diam != 3)
        throw PreconditionError("modular SR: product diameter is " + std::to_string(diam));
    return diam;
}

namespace {

bool gamma_formula_applies(const ModularFactor& g, const ModularFactor& h) {
    return (g.has_gamma_pair() && !h.has_universal()) || (h.has_gamma_pair() && !g.has_universal());
}

SrGraph diameter2(const ModularFactor& g, const ModularFactor& h) {
    const Builder b(g, h);
    EdgeList edges;
    b.add_if(edges, [&](ProductVertex x, ProductVertex y) {
        return adjacent_twins_modular(g, h, x, y) ||
               cartesian_edge(x, y, non_adjacency(g), non_adjacency(h), keep_all, keep_all) ||
               direct_edge(x, y, adjacency(g), non_adjacency(h), keep_all, keep_all) ||
               direct_edge(x, y, non_adjacency(g), adjacency(h), keep_all, keep_all);
    });
    return make_sr_graph(b.size(), std::move(edges));
}

SrGraph gamma_formula(const ModularFactor& g, const ModularFactor& h) {
    const Builder b(g, h);
    auto minus_g = [&](Vertex v) { return !g.gamma.in_some_pair(v); };
    auto minus_h = [&](Vertex v) { return !h.gamma.in_some_pair(v); };
    std::vector<bool> tw_g(g.order(), false), tw_h(h.order(), false);
    for (const Edge& e : twin_edges(*g.graph))
        tw_g[e.u] = tw_g[e.v] = true;
    for (const Edge& e : twin_edges(*h.graph))
        tw_h[e.u] = tw_h[e.v] = true;
    auto in_tw_g = [&](Vertex v) { return bool(tw_g[v]); };
    auto in_tw_h = [&](Vertex v) { return bool(tw_h[v]); };
    EdgeList edges;
    b.add_if(edges, [&](ProductVertex x, ProductVertex y) {
        return adjacent_twins_modular(g, h, x, y) ||
               cartesian_edge(x, y, non_adjacency(g), non_adjacency(h), minus_g, minus_h) ||
               direct_edge(x, y, adjacency(g), non_adjacency(h), minus_g, minus_h) ||
               direct_edge(x, y, non_adjacency(g), adjacency(h), minus_g, minus_h) ||
               cartesian_edge(x, y, gamma_adjacency(g), gamma_adjacency(h), keep_all, keep_all) ||
               direct_edge(x, y, adjacency(g), gamma_adjacency(h), in_tw_g, keep_all) ||
               direct_edge(x, y, gamma_adjacency(g), adjacency(h), keep_all, in_tw_h);
    });
    return make_sr_graph(b.size(), std::move(edges));
}

SrGraph clauses(const ModularFactor& g, const ModularFactor& h) {
    const Builder b(g, h);
    const Graph product = modular(*g.graph, *h.graph);
    // With diameter 3, a vertex is a boundary vertex iff some vertex is at
    // distance 3 from it.
    std::vector<bool> boundary(b.size(), false);
    for (Vertex x = 0; x < b.size(); ++x)
        for (Vertex y = 0; y < b.size() && !boundary[x]; ++y)
            boundary[x] = x != y && modular_distance3(g, h, b.split(x), b.split(y));
    EdgeList edges;
    b.add_if(edges, [&](ProductVertex x, ProductVertex y) {
        if (adjacent_twins_modular(g, h, x, y))
            return true;  // (a)
        const bool d3 = modular_distance3(g, h, x, y);
        if (d3)
            return true;  // (c)
        const bool d2 = !product.adjacent(b.join(x), b.join(y));
        if (d2 && !boundary[b.join(x)] && !boundary[b.join(y)])
            return true;  // (b)
        for (int orient = 0; orient < 2; ++orient) {
            const ProductVertex p = orient ? y : x;
            const ProductVertex q = orient ? x : y;
            if (clause_d(g, h, p, q) || clause_d(h, g, mirror(p), mirror(q)) ||
                clause_e(g, h, p, q) || clause_e(h, g, mirror(p), mirror(q)))
                return true;  // (d), (e)
        }
        return false;
    });
    return make_sr_graph(b.size(), std::move(edges));
}

}  // namespace

SrGraph modular_sr_diameter2(const Graph& g, const Graph& h) {
    if (modular_sr_preconditions(g, h) != 2)
        throw PreconditionError("modular SR: diameter-2 formula needs diam(G ◇ H) = 2");
    return diameter2(ModularFactor(g), ModularFactor(h));
}

SrGraph modular_sr_gamma_formula(const Graph& g, const Graph& h) {
    if (modular_sr_preconditions(g, h) != 3)
        throw PreconditionError("modular SR: γ-pair formula needs diam(G ◇ H) = 3");
    const ModularFactor fg(g), fh(h);
    if (!gamma_formula_applies(fg, fh))
        throw PreconditionError(
            "modular SR: γ-pair formula needs a γ-pair in one factor and no universal vertex in the other");
    return gamma_formula(fg, fh);
}

SrGraph modular_sr_clauses(const Graph& g, const Graph& h) {
    if (modular_sr_preconditions(g, h) != 3)
        throw PreconditionError("modular SR: clause test needs diam(G ◇ H) = 3");
    return clauses(ModularFactor(g), ModularFactor(h));
}

ModularSrMethod modular_sr_method(const Graph& g, const Graph& h) {
    if (modular_sr_preconditions(g, h) == 2)
        return ModularSrMethod::Diameter2;
    return gamma_formula_applies(ModularFactor(g), ModularFactor(h)) ? ModularSrMethod::GammaPairFormula
                                                                     : ModularSrMethod::Clauses;
}

SrGraph modular_sr_by_theorem(const Graph& g, const Graph& h) {
    const int diam = modular_sr_preconditions(g, h);
    const ModularFactor fg(g), fh(h);
    if (diam == 2)
        return diameter2(fg, fh);
    if (gamma_formula_applies(fg, fh))
        return gamma_formula(fg, fh);
    return clauses(fg, fh);
}

}  // namespace mbsr
