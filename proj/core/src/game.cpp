#include "mbsr/game.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

#include "mbsr/error.hpp"

namespace mbsr {

std::string_view to_string(Outcome o) {
    switch (o) {
    case Outcome::M:
        return "M";
    case Outcome::N:
        return "N";
    case Outcome::B:
        return "B";
    }
    return "?";
}

std::optional<Outcome> parse_outcome(std::string_view s) {
    if (s.size() != 1)
        return std::nullopt;
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'M':
        return Outcome::M;
    case 'N':
        return Outcome::N;
    case 'B':
        return Outcome::B;
    default:
        return std::nullopt;
    }
}

std::string_view to_string(Player p) {
    return p == Player::Maker ? "Maker" : "Breaker";
}

Player GameState::to_move(Player first) const {
    const int diff = std::popcount(maker) - std::popcount(breaker);
    if (first == Player::Maker)
        return diff == 0 ? Player::Maker : Player::Breaker;
    return diff == 0 ? Player::Breaker : Player::Maker;
}

MakerBreakerSolver::MakerBreakerSolver(WinSystem sys, int limit) : sys_(std::move(sys)) {
    if (sys_.board_size > limit || sys_.board_size > kMaxGameBoard)
        throw LimitExceeded("game board limited to " + std::to_string(std::min(limit, kMaxGameBoard)) +
                            " vertices, got " + std::to_string(sys_.board_size));
    if (!sys_.maker_done || !sys_.breaker_done)
        throw PreconditionError("win system needs both predicates");
}

std::optional<Player> MakerBreakerSolver::winner_if_over(const GameState& s) const {
    if (sys_.maker_done(s.maker))
        return Player::Maker;
    if (sys_.breaker_done(s.breaker) || s.free() == 0)
        return Player::Breaker;
    return std::nullopt;
}

std::vector<Vertex> MakerBreakerSolver::ordered_moves(Mask maker, Mask breaker, Mask free) const {
    std::vector<Vertex> moves = mask_to_vertices(free);
    if (sys_.order_moves)
        sys_.order_moves(GameState{maker, breaker, sys_.board_size}, moves);
    return moves;
}

bool MakerBreakerSolver::search(Mask maker, Mask breaker, Player to_move) {
    ++nodes_;
    if (sys_.maker_done(maker))
        return true;
    if (sys_.breaker_done(breaker))
        return false;
    const Mask board = GameState{0, 0, sys_.board_size}.board();
    const Mask free = board & ~(maker | breaker);
    if (free == 0)
        return false;

    const std::uint64_t key = maker | (breaker << kMaxGameBoard) |
                              (std::uint64_t{to_move == Player::Maker} << (2 * kMaxGameBoard));
    if (auto it = table_.find(key); it != table_.end())
        return it->second;

    bool result = false;
    if (to_move == Player::Maker) {
        Mask threats = 0;
        bool finished = false;
        for (Mask rest = free; rest; rest &= rest - 1) {
            const Mask bit = rest & (~rest + 1);
            if (sys_.maker_done(maker | bit)) {
                finished = true;
                break;
            }
            if (sys_.breaker_done(breaker | bit))
                threats |= bit;
        }
        if (finished) {
            result = true;
        } else if (std::popcount(threats) >= 2) {
            result = false;
        } else if (threats) {
            result = search(maker | threats, breaker, Player::Breaker);
        } else {
            const std::vector<Vertex> moves = ordered_moves(maker, breaker, free);
            for (Vertex v : moves)
                if (search(maker | (Mask{1} << v), breaker, Player::Breaker)) {
                    result = true;
                    break;
                }
        }
    } else {
        Mask threats = 0;
        bool finished = false;
        for (Mask rest = free; rest; rest &= rest - 1) {
            const Mask bit = rest & (~rest + 1);
            if (sys_.breaker_done(breaker | bit)) {
                finished = true;
                break;
            }
            if (sys_.maker_done(maker | bit))
                threats |= bit;
        }
        if (finished) {
            result = false;
        } else if (std::popcount(threats) >= 2) {
            result = true;
        } else if (threats) {
            result = search(maker, breaker | threats, Player::Maker);
        } else {
            result = true;
            const std::vector<Vertex> moves = ordered_moves(maker, breaker, free);
            for (Vertex v : moves)
                if (!search(maker, breaker | (Mask{1} << v), Player::Maker)) {
                    result = false;
                    break;
                }
        }
    }
    table_.emplace(key, result);
    return result;
}

bool MakerBreakerSolver::maker_wins(const GameState& s, Player to_move) {
    if (s.maker & s.breaker)
        throw PreconditionError("game state: a vertex is claimed twice");
    return search(s.maker, s.breaker, to_move);
}

Player MakerBreakerSolver::solve(Player first) {
    return maker_wins(GameState{0, 0, sys_.board_size}, first) ? Player::Maker : Player::Breaker;
}

std::optional<Vertex> MakerBreakerSolver::best_move(const GameState& s, Player to_move) {
    if (winner_if_over(s))
        return std::nullopt;
    const bool maker_value = maker_wins(s, to_move);
    const bool mover_wins = (to_move == Player::Maker) == maker_value;
    const std::vector<Vertex> moves = mask_to_vertices(s.free());
    if (!mover_wins)
        return moves.front();
    for (Vertex v : moves) {
        GameState next = s;
        (to_move == Player::Maker ? next.maker : next.breaker) |= Mask{1} << v;
        if (maker_wins(next, opponent(to_move)) == maker_value)
            return v;
    }
    throw std::logic_error("best_move: winning position without a winning move");
}

Player solve_mb(const WinSystem& sys, Player first, int limit) {
    return MakerBreakerSolver(sys, limit).solve(first);
}

Outcome combine_outcome(Player m_game_winner, Player b_game_winner) {
    if (m_game_winner == Player::Maker)
        return b_game_winner == Player::Maker ? Outcome::M : Outcome::N;
    if (b_game_winner == Player::Maker)
        throw std::logic_error("Maker lost the M-game but won the B-game");
    return Outcome::B;
}

Outcome solve_outcome(const WinSystem& sys, int limit) {
    MakerBreakerSolver solver(sys, limit);
    const Player m_game = solver.solve(Player::Maker);
    const Player b_game = solver.solve(Player::Breaker);
    return combine_outcome(m_game, b_game);
}

}  // namespace mbsr
