#include <doctest.h>

#include <algorithm>
#include <random>

#include "mbsr/distance.hpp"
#include "mbsr/enumerate.hpp"
#include "mbsr/error.hpp"
#include "mbsr/families.hpp"
#include "mbsr/graph_ops.hpp"
#include "mbsr/outcome.hpp"
#include "mbsr/resolving.hpp"
#include "oracles.hpp"

using namespace mbsr;

namespace {

Outcome from_int(int v) { return static_cast<Outcome>(v); }

Outcome with_random_order(const Graph& core, Rng& rng) {
    WinSystem sys = vertex_cover_game(core);
    sys.order_moves = [&rng](const GameState&, std::vector<Vertex>& moves) {
        std::shuffle(moves.begin(), moves.end(), rng);
    };
    return solve_outcome(sys);
}

Outcome oracle_core_outcome(const Graph& core) {
    const int n = core.order();
    auto maker_done = [&core](oracle::Set s) { return oracle::covers(core, s); };
    auto breaker_done = [&core](oracle::Set b) {
        for (const Edge& e : core.edges())
            if (((b >> e.u) & 1) && ((b >> e.v) & 1))
                return true;
        return false;
    };
    const bool m = oracle::maker_wins_game(n, maker_done, breaker_done, true);
    const bool b = oracle::maker_wins_game(n, maker_done, breaker_done, false);
    return m ? (b ? Outcome::M : Outcome::N) : Outcome::B;
}

}  // namespace

TEST_SUITE("mb-games") {

TEST_CASE("outcome order and names") {
    CHECK(Outcome::B < Outcome::N);
    CHECK(Outcome::N < Outcome::M);
    CHECK(to_string(Outcome::N) == "N");
    CHECK(parse_outcome("m") == Outcome::M);
    CHECK_FALSE(parse_outcome("x").has_value());
    CHECK(combine_outcome(Player::Maker, Player::Breaker) == Outcome::N);
    CHECK_THROWS_AS(combine_outcome(Player::Breaker, Player::Maker), std::logic_error);
}

TEST_CASE("solver examples") {
    CHECK(solve_mb(vertex_cover_game(complete(2)), Player::Maker) == Player::Maker);
    CHECK(solve_mb(vertex_cover_game(path(3)), Player::Breaker) == Player::Breaker);
    CHECK(solve_mb(vertex_cover_game(complete(3)), Player::Maker) == Player::Maker);
    CHECK(solve_mb(vertex_cover_game(complete(3)), Player::Breaker) == Player::Breaker);
    CHECK_THROWS_AS(MakerBreakerSolver(vertex_cover_game(empty_graph(21))), LimitExceeded);
    CHECK_THROWS_AS(MakerBreakerSolver(vertex_cover_game(empty_graph(32)), 40), LimitExceeded);
}

TEST_CASE("outcome examples") {
    CHECK(outcome_srg_exact(cycle(4)) == Outcome::M);
    CHECK(outcome_srg_exact(star(3)) == Outcome::N);
    CHECK(outcome_srg_exact(petersen()) == Outcome::B);
    CHECK(outcome_rg_exact(path(5)) == Outcome::M);
    CHECK(outcome_rg_exact(spider({2, 2, 1})) == Outcome::M);
    CHECK(outcome_rg_exact(spider({2, 1, 1, 1})) == Outcome::N);
    CHECK_THROWS_AS(outcome_rg_exact(path(15)), LimitExceeded);
    CHECK_THROWS_AS(outcome_srg_exact(Graph(4, {{0, 1}, {2, 3}})), PreconditionError);
    CHECK(compare_outcomes(path(6)) == std::pair{Outcome::M, Outcome::M});
    CHECK(compare_outcomes(spider({2, 2, 1})) == std::pair{Outcome::N, Outcome::M});
    CHECK(compare_outcomes(spider({2, 1, 1, 1})) == std::pair{Outcome::B, Outcome::N});
}

TEST_CASE("classifier examples") {
    CHECK(outcome_srg_classifier(disjoint_copies(complete(2), 5)) == Outcome::M);
    CHECK(outcome_srg_classifier(path(5)) == Outcome::N);
    CHECK(outcome_srg_classifier(complete(4)) == Outcome::B);
    CHECK(outcome_srg_classifier(cycle(3)) == Outcome::N);
    CHECK(outcome_srg_classifier(cycle(4)) == Outcome::B);
    CHECK_THROWS_AS(outcome_srg_classifier(Graph(0)), PreconditionError);
}

TEST_CASE("pairing certificates") {
    const Graph matching = disjoint_copies(complete(2), 3);
    CHECK(is_pairing_vertex_cover(matching, {{0, 1}, {2, 3}, {4, 5}}));
    CHECK_FALSE(is_pairing_vertex_cover(path(3), {{0, 2}}));
    CHECK_FALSE(is_pairing_vertex_cover(cycle(4), {{0, 2}, {1, 3}}));
    CHECK_THROWS_AS(is_pairing_vertex_cover(cycle(4), {{0, 1}, {1, 2}}), PreconditionError);
    CHECK_THROWS_AS(is_pairing_vertex_cover(cycle(4), {{0, 4}}), PreconditionError);
    CHECK_THROWS_AS(is_pairing_vertex_cover(matching, {{0, 1}, {2, 3}, {4, 5}}, 2), LimitExceeded);

    CHECK(is_quasi_pairing_vertex_cover(cycle(3), {{0, 2}}, 1));
    CHECK(is_quasi_pairing_vertex_cover(path(4), {{2, 3}}, 1));
    for (Vertex a = 0; a < 4; ++a)
        for (Vertex b = a + 1; b < 4; ++b)
            for (Vertex v = 0; v < 4; ++v)
                if (v != a && v != b)
                    CHECK_FALSE(is_quasi_pairing_vertex_cover(complete(4), {{a, b}}, v));
    CHECK_THROWS_AS(is_quasi_pairing_vertex_cover(cycle(3), {{0, 2}}, 2), PreconditionError);

    const SrGraph sr = strong_resolving_graph(cycle(6));
    std::vector<VertexPair> antipodal;
    for (const Edge& e : sr.core.edges())
        antipodal.emplace_back(e.u, e.v);
    CHECK(is_pairing_vertex_cover(sr, antipodal));

    CHECK(find_pairing_vertex_cover(matching).has_value());
    CHECK_FALSE(find_pairing_vertex_cover(path(3)).has_value());
    const auto quasi = find_quasi_pairing_vertex_cover(path(5));
    REQUIRE(quasi.has_value());
    REQUIRE(quasi->extra.has_value());
    CHECK(is_quasi_pairing_vertex_cover(path(5), quasi->pairs, *quasi->extra));
    CHECK_FALSE(find_quasi_pairing_vertex_cover(complete(4)).has_value());
}

TEST_CASE("solver agrees with plain minimax on small cores") {
    for (int n = 2; n <= 6; ++n)
        for_each_labeled_graph(n, [](const Graph& core) {
            if (core.size() == 0)
                return true;
            const Outcome expected = oracle_core_outcome(core);
            CHECK(solve_outcome(vertex_cover_game(core)) == expected);
            CHECK(outcome_srg_classifier(core) == expected);
            return true;
        });
}

TEST_CASE("move order never changes a value") {
    Rng rng(17);
    for (int i = 0; i < 150; ++i) {
        const Graph g = random_connected_graph(5 + i % 5, rng);
        const SrGraph sr = strong_resolving_graph(g);
        CHECK(with_random_order(sr.core, rng) == outcome_srg_exact(sr));
    }
}

TEST_CASE("best move keeps the winning side winning") {
    Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        const Graph core = strong_resolving_graph(random_connected_graph(6 + i % 3, rng)).core;
        MakerBreakerSolver solver(vertex_cover_game(core));
        GameState s{0, 0, core.order()};
        Player turn = i % 2 ? Player::Maker : Player::Breaker;
        const bool maker_wins = solver.maker_wins(s, turn);
        while (!solver.winner_if_over(s) && s.free()) {
            const auto mv = solver.best_move(s, turn);
            REQUIRE(mv.has_value());
            if (turn == Player::Maker)
                s.maker |= Mask{1} << *mv;
            else
                s.breaker |= Mask{1} << *mv;
            turn = opponent(turn);
            CHECK(solver.maker_wins(s, turn) == maker_wins);
        }
    }
}

TEST_CASE("full-board games match the oracle, and the core board gives the same value") {
    for (int n = 2; n <= 6; ++n)
        for_each_connected_graph(n, [](const Graph& g) {
            const Outcome full = solve_outcome(strong_resolving_game(g));
            CHECK(full == from_int(oracle::outcome_sr(g)));
            CHECK(full == outcome_srg_exact(g));
            return true;
        });
}

TEST_CASE("resolving game matches the oracle and dominates the strong game") {
    for (int n = 2; n <= 5; ++n)
        for_each_connected_graph(n, [](const Graph& g) {
            const auto [sr, r] = compare_outcomes(g);
            CHECK(r == from_int(oracle::outcome_r(g)));
            CHECK(sr <= r);
            return true;
        });
    Rng rng(2);
    for (int i = 0; i < 40; ++i) {
        const Graph g = random_connected_graph(6 + i % 2, rng);
        const auto [sr, r] = compare_outcomes(g);
        CHECK(r == from_int(oracle::outcome_r(g)));
        CHECK(sr <= r);
    }
}

TEST_CASE("no second-player advantage") {
    Rng rng(23);
    for (int i = 0; i < 150; ++i) {
        const Graph g = random_connected_graph(4 + i % 5, rng);
        for (const WinSystem& sys : {strong_resolving_game(g), resolving_game(g)}) {
            const Player m = solve_mb(sys, Player::Maker);
            const Player b = solve_mb(sys, Player::Breaker);
            CHECK_FALSE((m == Player::Breaker && b == Player::Maker));
        }
    }
}

TEST_CASE("certificates imply outcomes on every connected graph up to six vertices") {
    for (int n = 2; n <= 6; ++n)
        for_each_connected_graph(n, [n](const Graph& g) {
            const SrGraph sr = strong_resolving_graph(g);
            const Outcome o = outcome_srg_exact(sr);
            if (find_pairing_vertex_cover(sr.core))
                CHECK(o == Outcome::M);
            if (find_quasi_pairing_vertex_cover(sr.core))
                CHECK(o >= Outcome::N);
            if (sr.core.max_degree() >= 2)
                CHECK(o <= Outcome::N);
            const int sdim = strong_metric_dimension(g).size;
            if (sdim >= (n + 1) / 2 + 1)
                CHECK(o == Outcome::B);
            return true;
        });
}

}  // TEST_SUITE
