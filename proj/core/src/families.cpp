#include "mbsr/families.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "mbsr/distance.hpp"
#include "mbsr/error.hpp"

namespace mbsr {

Graph empty_graph(int n) {
    if (n < 0)
        throw PreconditionError("empty_graph: negative order");
    return Graph(n);
}

Graph path(int n) {
    if (n < 1)
        throw PreconditionError("path: n must be at least 1");
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i)
        e.push_back({i, i + 1});
    return Graph(n, e);
}

Graph cycle(int n) {
    if (n < 3)
        throw PreconditionError("cycle: n must be at least 3");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        e.push_back({i, (i + 1) % n});
    return Graph(n, e);
}

Graph complete(int n) {
    if (n < 1)
        throw PreconditionError("complete: n must be at least 1");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            e.push_back({i, j});
    return Graph(n, e);
}

Graph star(int x) {
    if (x < 1)
        throw PreconditionError("star: x must be at least 1");
    std::vector<Edge> e;
    for (Vertex i = 1; i <= x; ++i)
        e.push_back({0, i});
    return Graph(x + 1, e);
}

Graph petersen() {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({i + 5, (i + 2) % 5 + 5});
        e.push_back({i, i + 5});
    }
    return Graph(10, e);
}

Graph complete_multipartite(std::span<const int> part_sizes) {
    if (part_sizes.empty())
        throw PreconditionError("complete_multipartite: no parts");
    std::vector<int> part;
    for (std::size_t p = 0; p < part_sizes.size(); ++p) {
        if (part_sizes[p] < 1)
            throw PreconditionError("complete_multipartite: part sizes must be positive");
        part.insert(part.end(), part_sizes[p], static_cast<int>(p));
    }
    const int n = static_cast<int>(part.size());
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (part[i] != part[j])
                e.push_back({i, j});
    return Graph(n, e);
}

Graph spider(std::vector<int> legs) {
    if (legs.empty())
        throw PreconditionError("spider: at least one leg required");
    std::sort(legs.begin(), legs.end(), std::greater<>());
    std::vector<Edge> e;
    Vertex next = 1;
    for (int len : legs) {
        if (len < 1)
            throw PreconditionError("spider: leg lengths must be positive");
        Vertex prev = 0;
        for (int k = 0; k < len; ++k, ++next) {
            e.push_back({prev, next});
            prev = next;
        }
    }
    return Graph(next, e);
}

Graph tree_from_parents(std::span<const int> parents) {
    const int n = static_cast<int>(parents.size());
    if (n == 0)
        throw PreconditionError("tree_from_parents: empty array");
    std::vector<Edge> e;
    int roots = 0;
    for (Vertex v = 0; v < n; ++v) {
        const int p = parents[v];
        if (p == -1) {
            ++roots;
            continue;
        }
        if (p < 0 || p >= n || p == v)
            throw PreconditionError("tree_from_parents: bad parent of vertex " + std::to_string(v));
        e.push_back({std::min(v, p), std::max(v, p)});
    }
    if (roots != 1)
        throw PreconditionError("tree_from_parents: expected exactly one root, found " +
                                std::to_string(roots));
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw PreconditionError("tree_from_parents: cycle detected");
    Graph g(n, e);
    if (!is_connected(g))
        throw PreconditionError("tree_from_parents: cycle detected");
    return g;
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

TreeStats tree_stats(const Graph& t) {
    if (t.order() < 2 || !is_tree(t))
        throw PreconditionError("tree_stats: input is not a tree of order at least 2");
    const DistanceMatrix d = all_pairs_distances(t);
    std::vector<Vertex> major;
    for (Vertex v = 0; v < t.order(); ++v)
        if (t.degree(v) >= 3)
            major.push_back(v);
    TreeStats s;
    for (Vertex leaf = 0; leaf < t.order(); ++leaf) {
        if (t.degree(leaf) != 1)
            continue;
        ++s.sigma;
        Vertex best = -1;
        bool unique = false;
        for (Vertex v : major) {
            if (best < 0 || d(leaf, v) < d(leaf, best)) {
                best = v;
                unique = true;
            } else if (d(leaf, v) == d(leaf, best)) {
                unique = false;
            }
        }
        if (best >= 0 && unique)
            ++s.terminal[best];
    }
    s.ex = static_cast<int>(s.terminal.size());
    return s;
}

}  // namespace mbsr
