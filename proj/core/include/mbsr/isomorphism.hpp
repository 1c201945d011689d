#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mbsr/graph.hpp"
#include "mbsr/limits.hpp"

namespace mbsr {

/// Exact isomorphism test by permutation search. Vertices are first split
/// into classes by an isomorphism invariant (degree, sorted distance profile,
/// sorted neighbor degrees, triangle count) and only class-preserving maps
/// are tried. Throws LimitExceeded when the common order exceeds `limit`;
/// graphs of different order or size are rejected before the check.
bool are_isomorphic(const Graph& a, const Graph& b, int limit = kDefaultLimits.isomorphism);

/// The map a -> b found by the same search, if any.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b,
                                                    int limit = kDefaultLimits.isomorphism);

/// Complete invariant: equal strings iff isomorphic. It is the
/// lexicographically smallest adjacency string over all labelings that list
/// the invariant classes in a fixed order. Throws LimitExceeded beyond `limit`.
std::string canonical_certificate(const Graph& g, int limit = kDefaultLimits.isomorphism);

/// Cheap isomorphism invariant (not complete) usable at any order.
std::string invariant_certificate(const Graph& g);

}  // namespace mbsr
