#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mbsr/distance.hpp"
#include "mbsr/game.hpp"
#include "mbsr/graph.hpp"
#include "mbsr/limits.hpp"
#include "mbsr/resolving.hpp"

namespace mbsr {

using VertexPair = std::pair<Vertex, Vertex>;

/// Maker wins by owning a vertex cover of `core`; Breaker by owning both
/// endpoints of an edge. Moves are ordered by descending residual degree
/// (edges not yet covered by Maker), lowest id first on ties.
WinSystem vertex_cover_game(const Graph& core);

/// MBSRG played on all of V(G) with the strong-resolving predicate itself.
/// Predicate values are memoized per mask. Connected graphs only.
WinSystem strong_resolving_game(const Graph& g);

/// MBRG: maker_done(S) = S resolves G, breaker_done(B) = V - B does not.
WinSystem resolving_game(const Graph& g);

/// O_SR(G) from the vertex-cover game on G_SR.
Outcome outcome_srg_exact(const Graph& g, int limit = kDefaultLimits.game_board);
Outcome outcome_srg_exact(const SrGraph& sr, int limit = kDefaultLimits.game_board);

/// O_R(G) from the resolving game on V(G).
Outcome outcome_rg_exact(const Graph& g, int limit = kDefaultLimits.rg_board);

/// Polynomial classifier on the SR core: M if max degree <= 1; B if deleting
/// any single vertex leaves max degree >= 2; N otherwise.
Outcome outcome_srg_classifier(const Graph& core);
Outcome outcome_srg_classifier(const SrGraph& sr);

/// Every transversal of `pairs` (one endpoint from each pair) covers `core`.
/// Pairs must be disjoint core vertices. `limit` bounds log2 of the number
/// of transversals enumerated.
bool is_pairing_vertex_cover(const Graph& core, const std::vector<VertexPair>& pairs,
                             int limit = kDefaultLimits.pairing_enum);
bool is_pairing_vertex_cover(const SrGraph& sr, const std::vector<VertexPair>& pairs,
                             int limit = kDefaultLimits.pairing_enum);

/// Every transversal plus `extra` covers `core`; `extra` lies outside the pairs.
bool is_quasi_pairing_vertex_cover(const Graph& core, const std::vector<VertexPair>& pairs,
                                   Vertex extra, int limit = kDefaultLimits.pairing_enum);
bool is_quasi_pairing_vertex_cover(const SrGraph& sr, const std::vector<VertexPair>& pairs,
                                   Vertex extra, int limit = kDefaultLimits.pairing_enum);

struct PairingCertificate {
    std::vector<VertexPair> pairs;
    std::optional<Vertex> extra;  // set for quasi-pairing certificates
};

/// Exhaustive search over all sets of disjoint vertex pairs of `core`
/// (not only edges). Throws LimitExceeded above `max_order` core vertices.
std::optional<PairingCertificate> find_pairing_vertex_cover(const Graph& core, int max_order = 10);
std::optional<PairingCertificate> find_quasi_pairing_vertex_cover(const Graph& core,
                                                                  int max_order = 10);

/// (O_SR(G), O_R(G)). Asserts O_SR <= O_R.
std::pair<Outcome, Outcome> compare_outcomes(const Graph& g, const Limits& limits = kDefaultLimits);

}  // namespace mbsr
