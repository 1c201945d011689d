#include "mbsr/enumerate.hpp"

#include <queue>
#include <vector>

#include "mbsr/distance.hpp"
#include "mbsr/error.hpp"

namespace mbsr {

namespace {

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            out.push_back({u, v});
    return out;
}

Graph from_bits(int n, const std::vector<Edge>& slots, std::uint64_t bits) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (bits >> i & 1)
            e.push_back(slots[i]);
    return Graph(n, e);
}

}  // namespace

void for_each_labeled_graph(int n, const std::function<bool(const Graph&)>& visit) {
    if (n < 0 || n > 8)
        throw LimitExceeded("labeled graph enumeration limited to 8 vertices");
    const auto slots = all_pairs(n);
    const std::uint64_t count = std::uint64_t{1} << slots.size();
    for (std::uint64_t bits = 0; bits < count; ++bits)
        if (!visit(from_bits(n, slots, bits)))
            return;
}

void for_each_connected_graph(int n, const std::function<bool(const Graph&)>& visit) {
    for_each_labeled_graph(n, [&](const Graph& g) { return !is_connected(g) || visit(g); });
}

Graph random_connected_graph(int n, Rng& rng) {
    if (n < 1 || n > 64)
        throw PreconditionError("random_connected_graph: order must be in 1..64");
    const auto slots = all_pairs(n);
    std::bernoulli_distribution coin(0.5);
    for (;;) {
        std::vector<Edge> e;
        for (const Edge& s : slots)
            if (coin(rng))
                e.push_back(s);
        Graph g(n, e);
        if (is_connected(g))
            return g;
    }
}

Graph random_tree(int n, Rng& rng) {
    if (n < 1)
        throw PreconditionError("random_tree: order must be positive");
    if (n <= 2)
        return n == 1 ? Graph(1) : Graph(2, {{0, 1}});
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> code(n - 2);
    std::vector<int> degree(n, 1);
    for (int& c : code) {
        c = pick(rng);
        ++degree[c];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.push(v);
    std::vector<Edge> e;
    for (int c : code) {
        const int leaf = leaves.top();
        leaves.pop();
        e.push_back({leaf, c});
        if (--degree[c] == 1)
            leaves.push(c);
    }
    const int a = leaves.top();
    leaves.pop();
    e.push_back({a, leaves.top()});
    return Graph(n, e);
}

}  // namespace mbsr
