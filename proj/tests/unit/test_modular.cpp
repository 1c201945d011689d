#include <doctest.h>

#include <random>

#include "mbsr/distance.hpp"
#include "mbsr/enumerate.hpp"
#include "mbsr/error.hpp"
#include "mbsr/families.hpp"
#include "mbsr/graph_ops.hpp"
#include "mbsr/modular_sr.hpp"
#include "mbsr/outcome.hpp"
#include "mbsr/products.hpp"
#include "mbsr/resolving.hpp"
#include "mbsr/shape.hpp"
#include "oracles.hpp"

using namespace mbsr;

namespace {

ShapeDescription k2s(int k) { return ShapeDescription::repeat(ShapeComponent::complete(2), k); }

// Factor pool: small connected and disconnected graphs, complements included.
std::vector<Graph> factor_pool() {
    std::vector<Graph> pool{path(3), path(4), path(5), cycle(4), cycle(5), cycle(6), star(3),
                            spider({2, 1, 1}), empty_graph(2), empty_graph(3),
                            disjoint_union(path(2), complete(1)), disjoint_union(path(3), complete(1))};
    const std::size_t base = pool.size();
    for (std::size_t i = 0; i < base; ++i)
        pool.push_back(complement(pool[i]));
    return pool;
}

bool meets_preconditions(const Graph& g, const Graph& h) {
    try {
        modular_sr_preconditions(g, h);
        return true;
    } catch (const PreconditionError&) {
        return false;
    }
}

bool same_closed_in_product(const Graph& p, Vertex x, Vertex y) {
    for (Vertex z = 0; z < p.order(); ++z)
        if ((z == x || p.adjacent(x, z)) != (z == y || p.adjacent(y, z)))
            return false;
    return true;
}

}  // namespace

TEST_SUITE("products.modular") {

TEST_CASE("named modular products") {
    const SrGraph c4c6 = modular_sr_by_theorem(cycle(4), cycle(6));
    CHECK(classify_shape(c4c6.core) == k2s(12));
    CHECK(outcome_srg_classifier(c4c6) == Outcome::M);

    const SrGraph p5 = modular_sr_by_theorem(complement(path(5)), path(5));
    CHECK(classify_shape(p5.core) == k2s(10) + ShapeDescription({ShapeComponent::path(5)}));
    CHECK(outcome_srg_classifier(p5) == Outcome::N);

    const SrGraph p4p4 = modular_sr_by_theorem(path(4), path(4));
    CHECK(outcome_srg_classifier(p4p4) == Outcome::B);
    // Corner pairs of the two gamma pairs {0,3} x {0,3} span a 4-cycle.
    const std::vector<Vertex> corners{product_vertex(0, 0, 4), product_vertex(0, 3, 4),
                                      product_vertex(3, 3, 4), product_vertex(3, 0, 4)};
    int sr_corner_edges = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        const int a = p4p4.core_vertex(corners[i]);
        const int b = p4p4.core_vertex(corners[(i + 1) % 4]);
        REQUIRE(a >= 0);
        REQUIRE(b >= 0);
        sr_corner_edges += p4p4.core.adjacent(a, b);
    }
    CHECK(sr_corner_edges == 4);
}

TEST_CASE("adjacent twins") {
    CHECK(adjacent_twins_modular(complete(3), complete(3), {0, 1}, {2, 0}));
    CHECK(adjacent_twins_modular(path(4), path(4), {0, 0}, {3, 3}));
    CHECK_FALSE(adjacent_twins_modular(path(4), path(4), {0, 0}, {1, 1}));
    CHECK_FALSE(adjacent_twins_modular(path(4), path(4), {0, 0}, {0, 0}));
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(modular_sr_by_theorem(complete(3), path(4)), PreconditionError);
    CHECK_THROWS_AS(modular_sr_by_theorem(empty_graph(2), empty_graph(2)), PreconditionError);
    CHECK(modular_sr_preconditions(cycle(4), cycle(6)) == 3);
    CHECK(modular_sr_method(cycle(4), cycle(6)) == ModularSrMethod::GammaPairFormula);
    CHECK(to_string(ModularSrMethod::Clauses) == "clauses");
    CHECK_THROWS_AS(modular_sr_gamma_formula(cycle(5), cycle(5)), PreconditionError);
}

TEST_CASE("twin and distance-3 predicates match the constructed product") {
    const auto pool = factor_pool();
    int pairs = 0;
    for (const Graph& g : pool)
        for (const Graph& h : pool) {
            const Graph p = modular(g, h);
            const DistanceMatrix d = all_pairs_distances(p);
            if (!d.connected() || is_complete(g) || is_complete(h))
                continue;
            ++pairs;
            const ModularFactor fg(g), fh(h);
            const int m = h.order();
            for (Vertex x = 0; x < p.order(); ++x)
                for (Vertex y = x + 1; y < p.order(); ++y) {
                    const auto a = product_factors(x, m), b = product_factors(y, m);
                    const bool twins = same_closed_in_product(p, x, y);
                    // Twins in a modular product are always adjacent.
                    if (twins)
                        CHECK(p.adjacent(x, y));
                    CHECK(adjacent_twins_modular(fg, fh, a, b) == twins);
                    CHECK(modular_distance3(fg, fh, a, b) == (d(x, y) == 3));
                    CHECK(d(x, y) <= 3);
                }
        }
    CHECK(pairs >= 100);
}

TEST_CASE("factor-level construction equals the direct MMD construction") {
    const auto pool = factor_pool();
    int tested = 0, gamma_and_clauses = 0;
    for (const Graph& g : pool)
        for (const Graph& h : pool) {
            if (!meets_preconditions(g, h))
                continue;
            ++tested;
            const SrGraph thm = modular_sr_by_theorem(g, h);
            const SrGraph direct = strong_resolving_graph(modular(g, h));
            CHECK(thm.to_parent == direct.to_parent);
            CHECK(thm.core == direct.core);
            if (modular_sr_preconditions(g, h) == 3) {
                const SrGraph clauses = modular_sr_clauses(g, h);
                CHECK(clauses.core == direct.core);
                if (modular_sr_method(g, h) == ModularSrMethod::GammaPairFormula) {
                    ++gamma_and_clauses;
                    CHECK(modular_sr_gamma_formula(g, h).core == clauses.core);
                }
            }
        }
    CHECK(tested >= 20);
    CHECK(gamma_and_clauses > 0);
}

TEST_CASE("random factors") {
    Rng rng(61);
    int tested = 0;
    for (int i = 0; i < 400 && tested < 120; ++i) {
        const Graph g = random_connected_graph(3 + i % 3, rng);
        Graph h = random_connected_graph(3 + (i / 3) % 4, rng);
        if (i % 4 == 0)
            h = complement(h);
        if (!meets_preconditions(g, h))
            continue;
        ++tested;
        const SrGraph thm = modular_sr_by_theorem(g, h);
        const Graph p = modular(g, h);
        std::vector<std::pair<int, int>> got;
        for (const Edge& e : thm.core.edges())
            got.emplace_back(thm.to_parent[e.u], thm.to_parent[e.v]);
        std::sort(got.begin(), got.end());
        CHECK(got == oracle::sr_edges(p));
    }
    CHECK(tested >= 60);
}

}  // TEST_SUITE
