#include "mbsr/shape.hpp"

#include <algorithm>
#include <map>

#include "mbsr/distance.hpp"
#include "mbsr/graph_ops.hpp"
#include "mbsr/isomorphism.hpp"

namespace mbsr {

namespace {

ShapeComponent normalized(ShapeComponent c) {
    using K = ShapeComponent::Kind;
    if (c.kind == K::Other)
        return c;
    c.certificate.clear();
    if (c.order <= 2 && c.kind != K::Cycle)
        c.kind = K::Complete;
    else if (c.order == 3 && c.kind == K::Complete)
        c.kind = K::Cycle;
    return c;
}

}  // namespace

ShapeComponent ShapeComponent::complete(int k) {
    return normalized({Kind::Complete, k, {}, false});
}
ShapeComponent ShapeComponent::cycle(int k) {
    return normalized({Kind::Cycle, k, {}, false});
}
ShapeComponent ShapeComponent::path(int k) {
    return normalized({Kind::Path, k, {}, false});
}

std::string ShapeComponent::name() const {
    switch (kind) {
    case Kind::Complete:
        return "K" + std::to_string(order);
    case Kind::Cycle:
        return "C" + std::to_string(order);
    case Kind::Path:
        return "P" + std::to_string(order);
    case Kind::Other:
        break;
    }
    return "X" + std::to_string(order) + "[" + certificate + "]";
}

ShapeDescription::ShapeDescription(std::vector<ShapeComponent> parts) {
    for (auto& p : parts)
        parts_.push_back(normalized(std::move(p)));
    std::sort(parts_.begin(), parts_.end());
}

ShapeDescription ShapeDescription::repeat(const ShapeComponent& c, int count) {
    return ShapeDescription(std::vector<ShapeComponent>(static_cast<std::size_t>(count), c));
}

ShapeDescription ShapeDescription::operator+(const ShapeDescription& other) const {
    std::vector<ShapeComponent> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return ShapeDescription(std::move(all));
}

int ShapeDescription::count(const ShapeComponent& c) const {
    const ShapeComponent n = normalized(c);
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), n));
}

int ShapeDescription::total_order() const {
    int total = 0;
    for (const auto& p : parts_)
        total += p.order;
    return total;
}

bool ShapeDescription::all_named() const {
    return std::none_of(parts_.begin(), parts_.end(),
                        [](const ShapeComponent& c) { return c.kind == ShapeComponent::Kind::Other; });
}

bool ShapeDescription::shape_level_only() const {
    return std::any_of(parts_.begin(), parts_.end(),
                       [](const ShapeComponent& c) { return c.shape_level_only; });
}

std::string ShapeDescription::to_string() const {
    if (parts_.empty())
        return "K0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i])
            ++j;
        if (!out.empty())
            out += " ∪ ";
        if (j - i > 1)
            out += std::to_string(j - i);
        out += parts_[i].name();
        i = j;
    }
    return out;
}

ShapeDescription classify_shape(const Graph& g, int iso_limit) {
    std::vector<ShapeComponent> parts;
    for (const auto& comp : connected_components(g)) {
        const InducedSubgraph sub = induced_subgraph(g, comp);
        const Graph& c = sub.graph;
        const int k = c.order();
        const int m = c.size();
        int min_deg = k;
        int max_deg = 0;
        for (Vertex v = 0; v < k; ++v) {
            min_deg = std::min(min_deg, c.degree(v));
            max_deg = std::max(max_deg, c.degree(v));
        }
        if (m == k * (k - 1) / 2) {
            parts.push_back(ShapeComponent::complete(k));
        } else if (k >= 3 && m == k && min_deg == 2 && max_deg == 2) {
            parts.push_back(ShapeComponent::cycle(k));
        } else if (m == k - 1 && max_deg <= 2) {
            parts.push_back(ShapeComponent::path(k));
        } else if (k <= iso_limit) {
            parts.push_back({ShapeComponent::Kind::Other, k, canonical_certificate(c, iso_limit), false});
        } else {
            parts.push_back({ShapeComponent::Kind::Other, k, invariant_certificate(c), true});
        }
    }
    return ShapeDescription(std::move(parts));
}

}  // namespace mbsr
