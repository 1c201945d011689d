#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "mbsr/distance.hpp"
#include "mbsr/graph.hpp"
#include "mbsr/products.hpp"
#include "mbsr/resolving.hpp"

namespace mbsr {

using ProductVertex = std::pair<Vertex, Vertex>;  // (g, h)

/// Per-factor data used by the modular-product characterizations.
struct ModularFactor {
    explicit ModularFactor(const Graph& g);

    const Graph* graph;
    DistanceMatrix dist;
    GammaPairSet gamma;
    std::vector<bool> universal;

    int order() const { return graph->order(); }
    /// N[u] = N[v]; true for u == v.
    bool same_closed(Vertex u, Vertex v) const;
    /// d(u, v) >= k, counting unreachable pairs as infinitely far.
    bool at_least(Vertex u, Vertex v, int k) const;
    bool has_universal() const;
    bool has_gamma_pair() const { return !gamma.pairs.empty(); }
};

/// (g,h) and (g',h') are distinct adjacent twins of G ◇ H:
/// (i) N[g] = N[g'] and N[h] = N[h'], or (ii) both factor pairs are γ-pairs.
bool adjacent_twins_modular(const ModularFactor& g, const ModularFactor& h, ProductVertex a,
                            ProductVertex b);
bool adjacent_twins_modular(const Graph& g, const Graph& h, ProductVertex a, ProductVertex b);

/// Factor-level test for d = 3 in G ◇ H (either orientation of
/// N[g]=N[g'] ∧ d_H(h,h') >= 3 ∧ (g universal ∨ {h,h'} a γ_H-pair)).
bool modular_distance3(const ModularFactor& g, const ModularFactor& h, ProductVertex a,
                       ProductVertex b);
bool modular_distance3(const Graph& g, const Graph& h, ProductVertex a, ProductVertex b);

enum class ModularSrMethod { Diameter2, GammaPairFormula, Clauses };
std::string_view to_string(ModularSrMethod m);

/// Preconditions shared by every construction: neither factor complete, not
/// both a union of two cliques, diam(G ◇ H) in {2, 3}. Returns the diameter
/// or throws PreconditionError.
int modular_sr_preconditions(const Graph& g, const Graph& h);

/// Which construction modular_sr_by_theorem would use.
ModularSrMethod modular_sr_method(const Graph& g, const Graph& h);

/// (G ◇ H)_SR from the factor-level characterizations, never from MMD
/// tests on the product. Diameter 2 uses the four-part formula; diameter 3
/// uses the γ-pair formula when one factor has a γ-pair and the other no
/// universal vertex, and the clause-by-clause test otherwise. Vertices use
/// the product encoding of modular(). Throws PreconditionError.
SrGraph modular_sr_by_theorem(const Graph& g, const Graph& h);

// Individual constructions; each checks its own hypothesis.
SrGraph modular_sr_diameter2(const Graph& g, const Graph& h);
SrGraph modular_sr_gamma_formula(const Graph& g, const Graph& h);
SrGraph modular_sr_clauses(const Graph& g, const Graph& h);

}  // namespace mbsr
