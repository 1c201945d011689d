#include <doctest.h>

#include <functional>
#include <random>

#include "mbsr/distance.hpp"
#include "mbsr/enumerate.hpp"
#include "mbsr/error.hpp"
#include "mbsr/families.hpp"
#include "mbsr/graph_ops.hpp"
#include "mbsr/isomorphism.hpp"
#include "mbsr/outcome.hpp"
#include "mbsr/products.hpp"
#include "mbsr/resolving.hpp"
#include "mbsr/shape.hpp"
#include "oracles.hpp"

using namespace mbsr;

namespace {

using PairRule = std::function<bool(bool same_u, bool gu, bool same_w, bool hw)>;

// Product adjacency straight from a rule on the factor relations.
void check_rule(const Graph& p, const Graph& g, const Graph& h, const PairRule& rule) {
    const int m = h.order();
    REQUIRE(p.order() == g.order() * m);
    for (Vertex x = 0; x < p.order(); ++x)
        for (Vertex y = 0; y < p.order(); ++y) {
            if (x == y)
                continue;
            const auto [u, w] = product_factors(x, m);
            const auto [u2, w2] = product_factors(y, m);
            REQUIRE(p.adjacent(x, y) == rule(u == u2, g.adjacent(u, u2), w == w2, h.adjacent(w, w2)));
        }
}

std::string shape(const Graph& g) { return classify_shape(g).to_string(); }

// Dominating pair check from closed neighborhoods.
bool dominating_pair(const Graph& g, Vertex u, Vertex w) {
    for (Vertex x = 0; x < g.order(); ++x) {
        const bool in_u = x == u || g.adjacent(x, u);
        const bool in_w = x == w || g.adjacent(x, w);
        if (in_u == in_w)
            return false;
    }
    return true;
}

int brute_domination(const Graph& g) {
    const int n = g.order();
    int best = n;
    for (oracle::Set s = 0; s < (oracle::Set{1} << n); ++s) {
        bool ok = true;
        for (Vertex x = 0; x < n && ok; ++x) {
            bool hit = (s >> x) & 1;
            for (Vertex y : g.neighbors(x))
                hit = hit || ((s >> y) & 1);
            ok = hit;
        }
        if (ok)
            best = std::min(best, std::popcount(s));
    }
    return best;
}

}  // namespace

TEST_SUITE("products") {

TEST_CASE("corona and join examples") {
    CHECK(are_isomorphic(corona(complete(1), path(4)), join(complete(1), path(4))));
    CHECK(are_isomorphic(corona(complete(2), complete(1)), path(4)));
    const Graph w4 = corona(complete(1), cycle(4));
    CHECK(w4.order() == 5);
    CHECK(w4.size() == 8);
    CHECK(shape(strong_resolving_graph(w4).core) == "2K2");
    CHECK(shape(strong_resolving_graph(corona(complete(2), complete(1))).core) == "K2");
    CHECK(join(complete(1), path(2)) == complete(3));
    CHECK(join(complete(1), cycle(3)) == complete(4));
    CHECK(are_isomorphic(join(complete(1), empty_graph(2)), path(3)));
    CHECK_THROWS_AS(corona(Graph(0), path(2)), PreconditionError);

    // Vertex j of the copy at u is n + u*m + j.
    const Graph c = corona(path(3), path(2));
    CHECK(c.order() == 9);
    CHECK(c.adjacent(1, 3 + 1 * 2 + 0));
    CHECK(c.adjacent(3 + 1 * 2 + 0, 3 + 1 * 2 + 1));
    CHECK_FALSE(c.adjacent(0, 3 + 1 * 2 + 0));
}

TEST_CASE("pair product examples") {
    CHECK(are_isomorphic(cartesian(complete(2), complete(2)), cycle(4)));
    CHECK(shape(direct(complete(2), complete(2))) == "2K2");
    const Graph a3b2 = direct(disjoint_copies(complete(2), 3), disjoint_copies(complete(2), 2));
    CHECK(shape(a3b2) == "12K2");
    CHECK(modular(complete(2), complete(2)) == complete(4));
    CHECK(all_pairs_distances(modular(cycle(4), cycle(6))).diameter() == 3);
    CHECK(cartesian(path(3), complete(2)).order() == 6);
    CHECK(are_isomorphic(cartesian(path(3), complete(2)),
                         Graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}})));
    for (int t = 1; t <= 3; ++t)
        for (const Graph& g : {path(3), cycle(4), star(3)})
            CHECK(lexicographic(g, complete(t)) == modular(g, complete(t)));
}

TEST_CASE("pair products follow their definitions") {
    Rng rng(41);
    for (int i = 0; i < 60; ++i) {
        const Graph g = random_connected_graph(1 + i % 5, rng);
        const Graph h = random_connected_graph(1 + (i / 5) % 5, rng);
        check_rule(cartesian(g, h), g, h, [](bool su, bool gu, bool sw, bool hw) {
            return (su && hw) || (sw && gu);
        });
        check_rule(direct(g, h), g, h, [](bool, bool gu, bool, bool hw) { return gu && hw; });
        check_rule(lexicographic(g, h), g, h, [](bool su, bool gu, bool, bool hw) {
            return gu || (su && hw);
        });
        const auto ref = oracle::modular_matrix(g, h);
        const Graph p = modular(g, h);
        for (Vertex x = 0; x < p.order(); ++x)
            for (Vertex y = 0; y < p.order(); ++y)
                REQUIRE(p.adjacent(x, y) == ref[x][y]);
    }
}

TEST_CASE("clique predicates") {
    CHECK(is_complete(complete(4)));
    CHECK(is_complete(complete(1)));
    CHECK_FALSE(is_complete(path(3)));
    CHECK(is_two_clique_union(disjoint_union(complete(3), complete(1))));
    CHECK(is_two_clique_union(empty_graph(2)));
    CHECK_FALSE(is_two_clique_union(empty_graph(3)));
    CHECK_FALSE(is_two_clique_union(disjoint_union(path(3), complete(2))));
    CHECK(universal_vertices(star(3)) == std::vector<Vertex>{0});
    CHECK(universal_vertices(cycle(4)).empty());
    CHECK(closed_twins(complete(3), 0, 2));
    CHECK_FALSE(closed_twins(cycle(4), 0, 2));
}

TEST_CASE("domination and gamma pairs") {
    CHECK(domination_number(path(5)) == 2);
    CHECK(domination_number(cycle(6)) == 2);
    CHECK(domination_number(petersen()) == 3);
    CHECK(domination_number(complete(4)) == 1);
    CHECK_THROWS_AS(domination_number(path(17)), LimitExceeded);

    const GammaPairSet p5 = gamma_pairs(path(5));
    CHECK(p5.pairs == std::vector<std::pair<Vertex, Vertex>>{{0, 3}, {1, 4}});
    CHECK_FALSE(p5.in_some_pair(2));
    CHECK(p5.contains(3, 0));
    CHECK(p5.members() == std::vector<Vertex>{0, 1, 3, 4});

    CHECK(gamma_pairs(cycle(6)).pairs == std::vector<std::pair<Vertex, Vertex>>{{0, 3}, {1, 4}, {2, 5}});
    CHECK(gamma_pairs(complete(5)).pairs.empty());
    CHECK(shape(gp_graph(cycle(6))) == "3K2");
    CHECK(shape(gp_graph(path(5))) == "K1 ∪ 2K2");
    CHECK(gp_graph(complete(4)).size() == 0);
}

TEST_CASE("gamma pairs re-verify against brute force") {
    Rng rng(43);
    for (int i = 0; i < 300; ++i) {
        const int n = 1 + i % 9;
        const Graph g = i % 3 ? random_connected_graph(n, rng) : random_tree(n, rng);
        const int gamma = brute_domination(g);
        CHECK(domination_number(g) == gamma);
        const GammaPairSet gp = gamma_pairs(g);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex w = u + 1; w < n; ++w)
                CHECK(gp.contains(u, w) == (gamma == 2 && dominating_pair(g, u, w)));
    }
}

TEST_CASE("twin edges") {
    CHECK(twin_edges(complete(3)).size() == 3);
    CHECK(twin_edges(path(4)).empty());
    CHECK(twin_edges(cycle(4)).empty());
    CHECK(twin_edges(path(2)) == std::vector<Edge>{{0, 1}});
}

TEST_CASE("Cartesian SR graph is the direct product of the SR graphs") {
    const std::vector<Graph> pool{path(2), path(3), path(4), cycle(4), cycle(5), star(3), complete(3),
                                  complete(4), spider({2, 1, 1})};
    for (const Graph& g : pool)
        for (const Graph& h : pool) {
            const SrGraph gs = strong_resolving_graph(g);
            const SrGraph hs = strong_resolving_graph(h);
            const SrGraph ps = strong_resolving_graph(cartesian(g, h));
            std::vector<Edge> expected;
            const Graph d = direct(gs.core, hs.core);
            for (const Edge& e : d.edges()) {
                const auto [a, b] = product_factors(e.u, hs.core.order());
                const auto [c, x] = product_factors(e.v, hs.core.order());
                expected.push_back({product_vertex(gs.to_parent[a], hs.to_parent[b], h.order()),
                                    product_vertex(gs.to_parent[c], hs.to_parent[x], h.order())});
            }
            const SrGraph want = make_sr_graph(g.order() * h.order(), expected);
            CHECK(ps.to_parent == want.to_parent);
            CHECK(ps.core == want.core);
            const bool matchings = gs.core.max_degree() <= 1 && hs.core.max_degree() <= 1;
            const Outcome o = outcome_srg_classifier(ps);
            CHECK(o != Outcome::N);
            CHECK((o == Outcome::M) == matchings);
        }
}

}  // TEST_SUITE
