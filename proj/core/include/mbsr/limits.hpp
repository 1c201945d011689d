#pragma once

namespace mbsr {

/// Size limits for the exact searches. All of them are plain vertex counts.
struct Limits {
    int isomorphism = 12;       // are_isomorphic / canonical certificates
    int metric_dimension = 14;  // subset search for dim(G)
    int vertex_cover = 40;      // branch-and-bound for tau(G)
    int clique = 40;            // twin-free clique search
    int game_board = 20;        // Maker-Breaker minimax board size
    int rg_board = 14;          // MBRG board (all of V(G))
    int domination = 16;        // exact domination number
    int pairing_enum = 20;      // log2 of the transversal count in pairing checks
};

inline constexpr Limits kDefaultLimits{};

/// Hard ceiling imposed by the 64-bit vertex masks.
inline constexpr int kMaskBits = 64;
/// Game states pack two boards plus a side bit into one 64-bit key.
inline constexpr int kMaxGameBoard = 31;

}  // namespace mbsr
