#pragma once

#include <iosfwd>
#include <optional>

#include "mbsr/game.hpp"
#include "mbsr/graph.hpp"
#include "mbsr/limits.hpp"

namespace mbsr::cli {

enum class GameKind { StrongResolving, Resolving };

struct PlayOptions {
    GameKind game = GameKind::StrongResolving;
    std::optional<Player> human;  // nullopt: engine plays both sides
    Player first = Player::Maker;
    Limits limits = kDefaultLimits;
};

struct PlayResult {
    Player winner = Player::Breaker;
    Player predicted = Player::Breaker;  // solver value of the opening position
};

/// Line-oriented session: the human enters one vertex id per turn, illegal
/// input is re-prompted, "quit" or end of input forfeits. The engine plays
/// the lowest-id value-preserving move. The game runs on all of V(G).
PlayResult play(const Graph& g, const PlayOptions& opts, std::istream& in, std::ostream& out);

}  // namespace mbsr::cli
