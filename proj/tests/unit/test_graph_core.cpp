#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mbsr/distance.hpp"
#include "mbsr/enumerate.hpp"
#include "mbsr/error.hpp"
#include "mbsr/families.hpp"
#include "mbsr/graph_io.hpp"
#include "mbsr/graph_ops.hpp"
#include "mbsr/isomorphism.hpp"
#include "mbsr/resolving.hpp"
#include "mbsr/shape.hpp"
#include "oracles.hpp"

using namespace mbsr;

namespace {

int parse_error_line(std::string_view text) {
    try {
        parse_edge_list(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    std::vector<Edge> e;
    for (const Edge& x : g.edges())
        e.push_back({perm[x.u], perm[x.v]});
    return Graph(g.order(), e);
}

}  // namespace

TEST_SUITE("graph-core") {

TEST_CASE("graph construction validates edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), PreconditionError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), PreconditionError);
    const Graph g(3, {{2, 0}});
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 0));
    CHECK(g.edges().front() == Edge{0, 2});
}

TEST_CASE("edge-list parsing") {
    CHECK(parse_edge_list("3 2\n0 1\n1 2") == path(3));
    const Graph k1 = parse_edge_list("1 0");
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);
    CHECK(parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0") == cycle(4));
    CHECK(parse_edge_list("# comment\n\n3 1\n# inner\n0 2\n") == Graph(3, {{0, 2}}));

    CHECK(parse_error_line("3 1\n0 x\n") == 2);
    CHECK(parse_error_line("3 1\n0 3\n") == 2);
    CHECK(parse_error_line("3 1\n1 1\n") == 2);
    CHECK(parse_error_line("3 2\n0 1\n1 0\n") == 3);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK(parse_error_line("3 1\n0 1\n1 2\n") == 3);
    CHECK(parse_error_line("x\n") == 1);
    CHECK(parse_error_line("3 1\n0 1 2\n") == 2);
}

TEST_CASE("json parsing and round trips") {
    const Graph g = parse_graph(R"({"n": 4, "edges": [[0,1],[1,2],[2,3]]})");
    CHECK(g == path(4));
    CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[0,2]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"edges": []})"), ParseError);
    for (const Graph& h : {petersen(), cycle(5), complete_multipartite(std::vector<int>{1, 2, 3})}) {
        CHECK(parse_graph(format_edge_list(h, {"note"})) == h);
        CHECK(parse_graph(format_graph_json(h)) == h);
    }
    const std::string dot = to_dot(path(2));
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
}

TEST_CASE("distances") {
    const DistanceMatrix c5 = all_pairs_distances(cycle(5));
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = 0; v < 5; ++v)
            if (u != v)
                CHECK((c5(u, v) == 1 || c5(u, v) == 2));
    CHECK(c5.diameter() == 2);
    CHECK(all_pairs_distances(path(4))(0, 3) == 3);
    CHECK(all_pairs_distances(petersen()).diameter() == 2);
    const DistanceMatrix split = all_pairs_distances(Graph(4, {{0, 1}, {2, 3}}));
    CHECK_FALSE(split.reachable(0, 2));
    CHECK(split.diameter() == 1);
}

TEST_CASE("distances agree with Floyd-Warshall and satisfy the triangle inequality") {
    Rng rng(7);
    std::uniform_int_distribution<int> order(2, 8);
    std::bernoulli_distribution coin(0.4);
    for (int i = 0; i < 300; ++i) {
        const int n = order(rng);
        std::vector<Edge> e;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng))
                    e.push_back({u, v});
        const Graph g(n, e);
        const auto ref = oracle::floyd(g);
        const DistanceMatrix d = all_pairs_distances(g);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) {
                if (ref[u][v] >= oracle::kInf) {
                    CHECK_FALSE(d.reachable(u, v));
                    continue;
                }
                REQUIRE(d(u, v) == ref[u][v]);
                CHECK((d(u, v) == 1) == g.adjacent(u, v));
                for (Vertex w = 0; w < n; ++w)
                    if (d.reachable(u, w) && d.reachable(w, v))
                        CHECK(d(u, v) <= d(u, w) + d(w, v));
            }
    }
}

TEST_CASE("connectivity") {
    CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(cycle(6)));
    CHECK_FALSE(is_connected(empty_graph(3)));
    CHECK(is_connected(complete(1)));
    CHECK_FALSE(is_connected(Graph(0)));
}

TEST_CASE("complement, induced subgraphs, disjoint unions") {
    CHECK(complement(complete(4)).size() == 0);
    CHECK(are_isomorphic(complement(cycle(5)), cycle(5)));
    const Graph cp5 = complement(path(5));
    CHECK(cp5.size() == 6);
    for_each_labeled_graph(5, [](const Graph& g) {
        CHECK(complement(complement(g)) == g);
        return true;
    });

    const std::vector<Vertex> keep{0, 1, 2, 3};
    CHECK(induced_subgraph(cycle(5), keep).graph == path(4));
    const std::vector<Vertex> all{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    const auto whole = induced_subgraph(petersen(), all);
    CHECK(whole.graph == petersen());
    CHECK(whole.to_parent == all);
    const std::vector<Vertex> bad{0, 10};
    CHECK_THROWS_AS(induced_subgraph(petersen(), bad), PreconditionError);

    // Removing the centre of P5 leaves a matching.
    const std::vector<Vertex> p5_minus_centre{0, 1, 3, 4};
    CHECK(classify_shape(induced_subgraph(path(5), p5_minus_centre).graph).to_string() == "2K2");

    CHECK(classify_shape(disjoint_union(complete(2), complete(2))).to_string() == "2K2");
    const Graph c3k2 = disjoint_union(cycle(3), complete(2));
    CHECK(c3k2.order() == 5);
    CHECK(c3k2.adjacent(3, 4));
    CHECK(disjoint_union(petersen(), Graph(0)) == petersen());
}

TEST_CASE("isomorphism examples") {
    CHECK(are_isomorphic(cycle(5), complement(cycle(5))));
    CHECK_FALSE(are_isomorphic(path(4), star(3)));
    const SrGraph sr = strong_resolving_graph(petersen());
    CHECK(sr.core.order() == 10);
    CHECK(are_isomorphic(sr.core, complement(petersen())));
    CHECK_THROWS_AS(are_isomorphic(cycle(13), cycle(13)), LimitExceeded);
    CHECK(are_isomorphic(cycle(13), cycle(13), 13));
}

TEST_CASE("isomorphism agrees with permutation search") {
    Rng rng(11);
    std::uniform_int_distribution<int> order(1, 7);
    for (int i = 0; i < 400; ++i) {
        const int n = order(rng);
        const Graph a = random_connected_graph(n, rng);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph b = i % 2 ? relabel(a, perm) : random_connected_graph(n, rng);
        const bool expected = oracle::isomorphic(a, b);
        CHECK(are_isomorphic(a, b) == expected);
        CHECK((canonical_certificate(a) == canonical_certificate(b)) == expected);
        if (auto iso = find_isomorphism(a, b)) {
            for (const Edge& e : a.edges())
                CHECK(b.adjacent((*iso)[e.u], (*iso)[e.v]));
        }
    }
}

TEST_CASE("isomorphism is an equivalence on sampled triples") {
    Rng rng(5);
    std::uniform_int_distribution<int> order(4, 8);
    for (int i = 0; i < 100; ++i) {
        const int n = order(rng);
        const Graph a = random_connected_graph(n, rng);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph b = relabel(a, perm);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph c = relabel(b, perm);
        CHECK(are_isomorphic(a, a));
        CHECK(are_isomorphic(a, b) == are_isomorphic(b, a));
        CHECK(are_isomorphic(a, b));
        CHECK(are_isomorphic(b, c));
        CHECK(are_isomorphic(a, c));
    }
}

TEST_CASE("shape classification") {
    CHECK(classify_shape(disjoint_copies(complete(2), 12)).to_string() == "12K2");
    const Graph p5_10k2 = disjoint_union(path(5), disjoint_copies(complete(2), 10));
    const ShapeDescription s = classify_shape(p5_10k2);
    CHECK(s.count(ShapeComponent::path(5)) == 1);
    CHECK(s.count(ShapeComponent::complete(2)) == 10);
    CHECK(s.total_order() == 25);
    CHECK(classify_shape(complete(3)) == ShapeDescription({ShapeComponent::cycle(3)}));
    CHECK(classify_shape(complete(3)) == ShapeDescription({ShapeComponent::complete(3)}));
    CHECK(classify_shape(path(2)) == ShapeDescription({ShapeComponent::complete(2)}));
    CHECK(classify_shape(Graph(0)).to_string() == "K0");
    const ShapeDescription other = classify_shape(star(3));
    CHECK_FALSE(other.all_named());
    CHECK(other.total_order() == 4);
}

TEST_CASE("shape of a disjoint union is the union of shapes") {
    Rng rng(3);
    std::uniform_int_distribution<int> order(1, 6);
    for (int i = 0; i < 100; ++i) {
        const Graph a = random_connected_graph(order(rng), rng);
        const Graph b = random_connected_graph(order(rng), rng);
        CHECK(classify_shape(disjoint_union(a, b)) == classify_shape(a) + classify_shape(b));
    }
}

}  // TEST_SUITE
