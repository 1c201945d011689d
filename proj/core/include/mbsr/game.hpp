#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mbsr/graph.hpp"
#include "mbsr/limits.hpp"

namespace mbsr {

/// Game outcome with the total order B < N < M.
enum class Outcome : int { B = -1, N = 0, M = 1 };

std::string_view to_string(Outcome o);
/// Accepts "M", "N", "B" (case-insensitive).
std::optional<Outcome> parse_outcome(std::string_view s);

enum class Player { Maker, Breaker };

constexpr Player opponent(Player p) { return p == Player::Maker ? Player::Breaker : Player::Maker; }
std::string_view to_string(Player p);

/// Claimed vertices of both players on a board of `board_size` vertices.
struct GameState {
    Mask maker = 0;
    Mask breaker = 0;
    int board_size = 0;

    Mask board() const { return board_size >= 64 ? ~Mask{0} : (Mask{1} << board_size) - 1; }
    Mask free() const { return board() & ~(maker | breaker); }
    bool claimed(Vertex v) const { return ((maker | breaker) >> v) & 1; }
    /// Side to move when `first` opened the game.
    Player to_move(Player first) const;
};

/// Maker-Breaker win condition.
///
/// maker_done must be monotone under inclusion. breaker_done(b) holds once
/// no winning set avoids b. Both are never true on the same reachable state.
struct WinSystem {
    int board_size = 0;
    std::function<bool(Mask)> maker_done;
    std::function<bool(Mask)> breaker_done;
    /// Optional move ordering; receives the free vertices in increasing order
    /// and may permute them. Ordering never changes a game value.
    std::function<void(const GameState&, std::vector<Vertex>&)> order_moves;
};

/// Exact Maker-Breaker solver: memoized minimax over (maker, breaker, side to
/// move) with a transposition table.
///
/// Besides plain search it applies two value-preserving one-ply rules: a side
/// that can finish on this move does so, and the side to move must answer a
/// single immediate threat of the opponent (two threats lose). Exhausting the
/// board without maker_done is a Breaker win.
class MakerBreakerSolver {
public:
    /// Throws LimitExceeded if the board exceeds `limit` (or 31 cells).
    explicit MakerBreakerSolver(WinSystem sys, int limit = kDefaultLimits.game_board);

    Player solve(Player first);
    bool maker_wins(const GameState& s, Player to_move);

    /// Lowest-id move that keeps the mover's game value (the lowest-id winning
    /// move when the mover wins, otherwise the lowest free vertex). Empty when
    /// the game is already decided or the board is full.
    std::optional<Vertex> best_move(const GameState& s, Player to_move);

    /// Game status independent of search.
    std::optional<Player> winner_if_over(const GameState& s) const;

    int board_size() const noexcept { return sys_.board_size; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    std::size_t table_size() const noexcept { return table_.size(); }

private:
    WinSystem sys_;
    std::unordered_map<std::uint64_t, bool> table_;
    std::uint64_t nodes_ = 0;

    bool search(Mask maker, Mask breaker, Player to_move);
    std::vector<Vertex> ordered_moves(Mask maker, Mask breaker, Mask free) const;
};

/// Convenience wrapper: winner of the game with `first` moving first.
Player solve_mb(const WinSystem& sys, Player first, int limit = kDefaultLimits.game_board);

/// Combines the M-game and B-game winners. Maker losing the M-game while
/// winning the B-game is impossible in Maker-Breaker games; that pair throws
/// std::logic_error.
Outcome combine_outcome(Player m_game_winner, Player b_game_winner);

/// Solves both games of a win system.
Outcome solve_outcome(const WinSystem& sys, int limit = kDefaultLimits.game_board);

}  // namespace mbsr
