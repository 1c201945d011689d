#include "mbsr/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "mbsr/distance.hpp"
#include "mbsr/error.hpp"

namespace mbsr {

namespace {

using Invariant = std::vector<int>;

std::vector<Invariant> vertex_invariants(const Graph& g) {
    const int n = g.order();
    const DistanceMatrix d = all_pairs_distances(g);
    std::vector<Invariant> inv(n);
    for (Vertex v = 0; v < n; ++v) {
        Invariant& key = inv[v];
        key.push_back(g.degree(v));
        int triangles = 0;
        auto nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                triangles += g.adjacent(nb[i], nb[j]) ? 1 : 0;
        key.push_back(triangles);
        std::vector<int> dist_profile;
        for (Vertex u = 0; u < n; ++u)
            dist_profile.push_back(d.reachable(v, u) ? d(v, u) : n + 1);
        std::sort(dist_profile.begin(), dist_profile.end());
        key.insert(key.end(), dist_profile.begin(), dist_profile.end());
        key.push_back(-1);
        std::vector<int> nb_deg;
        for (Vertex u : nb)
            nb_deg.push_back(g.degree(u));
        std::sort(nb_deg.begin(), nb_deg.end());
        key.insert(key.end(), nb_deg.begin(), nb_deg.end());
    }
    return inv;
}

// Class id per vertex, ids ordered by the invariant's lexicographic order.
std::vector<int> invariant_classes(const std::vector<Invariant>& inv) {
    std::map<Invariant, int> ids;
    for (const auto& key : inv)
        ids.emplace(key, 0);
    int next = 0;
    for (auto& [key, id] : ids)
        id = next++;
    std::vector<int> cls;
    cls.reserve(inv.size());
    for (const auto& key : inv)
        cls.push_back(ids.at(key));
    return cls;
}

bool are_twins(const Graph& g, Vertex u, Vertex w) {
    for (Vertex x = 0; x < g.order(); ++x) {
        if (x == u || x == w)
            continue;
        if (g.adjacent(u, x) != g.adjacent(w, x))
            return false;
    }
    return true;
}

// Placement order for the matching search: greedily take the vertex with
// the most already-placed neighbors, preferring small invariant classes.
std::vector<Vertex> search_order(const Graph& g, const std::vector<int>& cls) {
    const int n = g.order();
    std::vector<int> class_size(n, 0);
    for (int c : cls)
        ++class_size[c];
    std::vector<bool> placed(n, false);
    std::vector<int> placed_nb(n, 0);
    std::vector<Vertex> order;
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v])
                continue;
            if (best < 0 || placed_nb[v] > placed_nb[best] ||
                (placed_nb[v] == placed_nb[best] && class_size[cls[v]] < class_size[cls[best]]))
                best = v;
        }
        placed[best] = true;
        order.push_back(best);
        for (Vertex w : g.neighbors(best))
            ++placed_nb[w];
    }
    return order;
}

struct Matcher {
    const Graph& a;
    const Graph& b;
    std::vector<int> cls_a;
    std::vector<int> cls_b;
    std::vector<Vertex> order;
    std::vector<Vertex> map_ab;
    std::vector<bool> used_b;

    bool extend(std::size_t depth) {
        if (depth == order.size())
            return true;
        const Vertex v = order[depth];
        for (Vertex w = 0; w < b.order(); ++w) {
            if (used_b[w] || cls_b[w] != cls_a[v])
                continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const Vertex pv = order[k];
                ok = a.adjacent(v, pv) == b.adjacent(w, map_ab[pv]);
            }
            if (!ok)
                continue;
            map_ab[v] = w;
            used_b[w] = true;
            if (extend(depth + 1))
                return true;
            used_b[w] = false;
        }
        return false;
    }
};

// Search for the lexicographically smallest adjacency string over labelings
// that place class 0 first, then class 1, ... Twins are interchangeable, so
// only the smallest unplaced member of a twin block is tried at each step.
struct Canonicalizer {
    const Graph& g;
    std::vector<int> position_class;  // class required at each position
    std::vector<int> cls;
    std::vector<int> twin_rep;
    std::vector<Vertex> perm;
    std::vector<bool> used;
    std::string current;
    std::string best;
    bool have_best = false;

    void run(std::size_t pos, bool strictly_less) {
        const std::size_t n = position_class.size();
        if (pos == n) {
            if (!have_best || strictly_less) {
                best = current;
                have_best = true;
            }
            return;
        }
        // Row p of the upper triangle occupies [p(p-1)/2, p(p+1)/2).
        const std::size_t row_start = pos == 0 ? 0 : pos * (pos - 1) / 2;
        std::vector<bool> tried_rep(g.order(), false);
        for (Vertex v = 0; v < g.order(); ++v) {
            if (used[v] || cls[v] != position_class[pos] || tried_rep[twin_rep[v]])
                continue;
            tried_rep[twin_rep[v]] = true;
            std::string row(pos, '0');
            for (std::size_t q = 0; q < pos; ++q)
                row[q] = g.adjacent(v, perm[q]) ? '1' : '0';
            bool less = strictly_less;
            if (have_best && !strictly_less) {
                const int c = row.compare(0, pos, best, row_start, pos);
                if (c > 0)
                    continue;
                less = c < 0;
            }
            perm[pos] = v;
            used[v] = true;
            current.replace(row_start, pos, row);
            run(pos + 1, less);
            used[v] = false;
        }
    }
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b, int limit) {
    if (a.order() != b.order() || a.size() != b.size())
        return std::nullopt;
    if (a.order() > limit)
        throw LimitExceeded("isomorphism test limited to " + std::to_string(limit) +
                            " vertices, got " + std::to_string(a.order()));
    auto inv_a = vertex_invariants(a);
    auto inv_b = vertex_invariants(b);
    {
        auto sa = inv_a;
        auto sb = inv_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return std::nullopt;
    }
    // Class ids must be shared between the two graphs.
    std::vector<Invariant> all = inv_a;
    all.insert(all.end(), inv_b.begin(), inv_b.end());
    std::vector<int> cls = invariant_classes(all);
    Matcher m{a, b, {}, {}, {}, std::vector<Vertex>(a.order(), -1), std::vector<bool>(b.order(), false)};
    m.cls_a.assign(cls.begin(), cls.begin() + a.order());
    m.cls_b.assign(cls.begin() + a.order(), cls.end());
    m.order = search_order(a, m.cls_a);
    if (!m.extend(0))
        return std::nullopt;
    return m.map_ab;
}

bool are_isomorphic(const Graph& a, const Graph& b, int limit) {
    return find_isomorphism(a, b, limit).has_value();
}

std::string canonical_certificate(const Graph& g, int limit) {
    const int n = g.order();
    if (n > limit)
        throw LimitExceeded("canonical certificate limited to " + std::to_string(limit) +
                            " vertices, got " + std::to_string(n));
    Canonicalizer c{g, {}, invariant_classes(vertex_invariants(g)), std::vector<int>(n), std::vector<Vertex>(n),
                    std::vector<bool>(n, false), std::string(n > 1 ? static_cast<std::size_t>(n) * (n - 1) / 2 : 0, '0'),
                    {}, false};
    c.position_class = c.cls;
    std::sort(c.position_class.begin(), c.position_class.end());
    for (Vertex v = 0; v < n; ++v) {
        c.twin_rep[v] = v;
        for (Vertex u = 0; u < v; ++u)
            if (c.cls[u] == c.cls[v] && are_twins(g, u, v)) {
                c.twin_rep[v] = c.twin_rep[u];
                break;
            }
    }
    c.run(0, false);
    std::ostringstream out;
    out << n << ':';
    for (int cl : c.position_class)
        out << cl << ',';
    out << ':' << c.best;
    return out.str();
}

std::string invariant_certificate(const Graph& g) {
    auto inv = vertex_invariants(g);
    std::sort(inv.begin(), inv.end());
    std::ostringstream out;
    out << g.order() << '/' << g.size();
    for (const auto& key : inv) {
        out << '|';
        for (int x : key)
            out << x << ',';
    }
    return out.str();
}

}  // namespace mbsr
