#include "play.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "mbsr/error.hpp"
#include "mbsr/outcome.hpp"

namespace mbsr::cli {

namespace {

std::string describe(Mask m) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (Vertex v : mask_to_vertices(m)) {
        out << (first ? "" : ",") << v;
        first = false;
    }
    out << '}';
    return out.str();
}

std::optional<Vertex> read_move(const GameState& s, std::istream& in, std::ostream& out) {
    std::string line;
    for (;;) {
        out << "your move> " << std::flush;
        if (!std::getline(in, line))
            return std::nullopt;
        std::istringstream tok(line);
        std::string word;
        if (!(tok >> word))
            continue;
        if (word == "quit")
            return std::nullopt;
        try {
            std::size_t used = 0;
            const int v = std::stoi(word, &used);
            if (used == word.size() && v >= 0 && v < s.board_size && !s.claimed(v))
                return v;
        } catch (const std::exception&) {
        }
        out << "illegal move '" << word << "'; enter a free vertex id in 0.." << s.board_size - 1 << "\n";
    }
}

}  // namespace

PlayResult play(const Graph& g, const PlayOptions& opts, std::istream& in, std::ostream& out) {
    const bool srg = opts.game == GameKind::StrongResolving;
    const int limit = srg ? opts.limits.game_board : opts.limits.rg_board;
    if (g.order() > limit)
        throw LimitExceeded("play: board of " + std::to_string(g.order()) + " vertices exceeds limit " +
                            std::to_string(limit));
    MakerBreakerSolver solver(srg ? strong_resolving_game(g) : resolving_game(g), limit);

    GameState s{0, 0, g.order()};
    PlayResult result;
    result.predicted = solver.maker_wins(s, opts.first) ? Player::Maker : Player::Breaker;
    out << (srg ? "MBSRG" : "MBRG") << " on " << g.order() << " vertices, " << to_string(opts.first)
        << " moves first; solver value: " << to_string(result.predicted) << " wins\n";

    Player to_move = opts.first;
    for (;;) {
        if (auto w = solver.winner_if_over(s)) {
            result.winner = *w;
            break;
        }
        if (s.free() == 0) {
            result.winner = Player::Breaker;
            break;
        }
        std::optional<Vertex> move;
        if (opts.human && *opts.human == to_move) {
            move = read_move(s, in, out);
            if (!move) {
                out << to_string(to_move) << " resigns\n";
                result.winner = opponent(to_move);
                break;
            }
        } else {
            move = solver.best_move(s, to_move);
        }
        if (to_move == Player::Maker)
            s.maker |= Mask{1} << *move;
        else
            s.breaker |= Mask{1} << *move;
        out << to_string(to_move) << " takes " << *move << "\n";
        to_move = opponent(to_move);
    }
    out << "Maker " << describe(s.maker) << ", Breaker " << describe(s.breaker) << "\n";
    out << "winner: " << to_string(result.winner) << "\n";
    return result;
}

}  // namespace mbsr::cli
