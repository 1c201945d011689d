#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mbsr/graph.hpp"
#include "mbsr/limits.hpp"

namespace mbsr {

/// One connected component named by isomorphism type.
///
/// Naming collisions are normalized on construction: K1 and P1 are Kn(1),
/// K2 and P2 are Kn(2), K3 and C3 are Cn(3).
struct ShapeComponent {
    enum class Kind { Complete, Cycle, Path, Other };

    Kind kind = Kind::Other;
    int order = 0;
    /// Canonical certificate for Other components, empty for named ones.
    std::string certificate;
    /// Other component larger than the isomorphism limit; its certificate is
    /// only an invariant, so equality is shape-level.
    bool shape_level_only = false;

    static ShapeComponent complete(int k);
    static ShapeComponent cycle(int k);
    static ShapeComponent path(int k);

    std::string name() const;

    friend auto operator<=>(const ShapeComponent&, const ShapeComponent&) = default;
};

/// Multiset of component descriptors of a graph.
class ShapeDescription {
public:
    ShapeDescription() = default;
    /// Normalizes and sorts the parts.
    explicit ShapeDescription(std::vector<ShapeComponent> parts);

    /// Shorthand for `count` copies of one component.
    static ShapeDescription repeat(const ShapeComponent& c, int count);
    ShapeDescription operator+(const ShapeDescription& other) const;

    const std::vector<ShapeComponent>& parts() const noexcept { return parts_; }
    int count(const ShapeComponent& c) const;
    int total_order() const;
    bool all_named() const;
    /// True when some component was compared only by invariant.
    bool shape_level_only() const;

    /// e.g. "P5 ∪ 10K2"; "K0" for the empty graph.
    std::string to_string() const;

    friend bool operator==(const ShapeDescription&, const ShapeDescription&) = default;

private:
    std::vector<ShapeComponent> parts_;
};

/// Matches each component against Kn / Cn / Pn by order, size and degrees;
/// anything else becomes Other with a canonical certificate (or an invariant
/// certificate flagged shape-level-only beyond `iso_limit`).
ShapeDescription classify_shape(const Graph& g, int iso_limit = kDefaultLimits.isomorphism);

}  // namespace mbsr
