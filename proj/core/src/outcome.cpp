#include "mbsr/outcome.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

#include "mbsr/error.hpp"

namespace mbsr {

namespace {

std::vector<Mask> adjacency_masks(const Graph& g) {
    if (g.order() > kMaskBits)
        throw LimitExceeded("game board above 64 vertices");
    std::vector<Mask> adj(g.order(), 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= Mask{1} << e.v;
        adj[e.v] |= Mask{1} << e.u;
    }
    return adj;
}

// Lazily filled table of a mask predicate over all 2^n subsets.
class MaskMemo {
public:
    MaskMemo(int n, std::function<bool(Mask)> f) : f_(std::move(f)) {
        if (n <= 24)
            table_.assign(std::size_t{1} << n, -1);
    }
    bool operator()(Mask m) {
        if (table_.empty())
            return f_(m);
        auto& cell = table_[m];
        if (cell < 0)
            cell = f_(m) ? 1 : 0;
        return cell == 1;
    }

private:
    std::function<bool(Mask)> f_;
    std::vector<signed char> table_;
};

WinSystem predicate_game(const Graph& g, bool (*pred)(const DistanceMatrix&, Mask)) {
    if (g.order() > kMaxGameBoard)
        throw LimitExceeded("game board limited to " + std::to_string(kMaxGameBoard) + " vertices");
    auto d = std::make_shared<DistanceMatrix>(all_pairs_distances(g));
    if (!d->connected())
        throw PreconditionError("resolving games need a connected graph");
    const int n = g.order();
    const Mask all = (Mask{1} << n) - 1;
    auto memo = std::make_shared<MaskMemo>(n, [d, pred](Mask m) { return pred(*d, m); });
    WinSystem sys;
    sys.board_size = n;
    sys.maker_done = [memo](Mask m) { return (*memo)(m); };
    sys.breaker_done = [memo, all](Mask b) { return !(*memo)(all & ~b); };
    return sys;
}

void check_pairs(const Graph& core, const std::vector<VertexPair>& pairs, int limit) {
    Mask seen = 0;
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= core.order() || b >= core.order())
            throw PreconditionError("pairing: vertex outside the SR core");
        const Mask bits = (Mask{1} << a) | (Mask{1} << b);
        if (a == b || (seen & bits))
            throw PreconditionError("pairing: pairs must be disjoint");
        seen |= bits;
    }
    if (static_cast<int>(pairs.size()) > limit)
        throw LimitExceeded("pairing check limited to 2^" + std::to_string(limit) + " transversals");
}

// Every transversal of `pairs`, together with `base`, is a vertex cover.
bool all_transversals_cover(const std::vector<Mask>& adj, const std::vector<VertexPair>& pairs,
                            Mask base) {
    const std::size_t k = pairs.size();
    const std::uint64_t count = std::uint64_t{1} << k;
    const int n = static_cast<int>(adj.size());
    for (std::uint64_t choice = 0; choice < count; ++choice) {
        Mask z = base;
        for (std::size_t i = 0; i < k; ++i)
            z |= Mask{1} << ((choice >> i & 1) ? pairs[i].second : pairs[i].first);
        for (int v = 0; v < n; ++v)
            if (!(z >> v & 1) && (adj[v] & ~z))
                return false;
    }
    return true;
}

// Calls `visit` with every set of disjoint pairs drawn from the vertices of
// `pool`; stops when it returns true.
bool for_each_pairing(Mask pool, std::vector<VertexPair>& pairs,
                      const std::function<bool(const std::vector<VertexPair>&)>& visit) {
    if (visit(pairs))
        return true;
    // Extend only with pairs whose first vertex exceeds all previous firsts
    // so each set is produced once.
    const int min_first = pairs.empty() ? 0 : pairs.back().first + 1;
    for (Mask a_rest = pool; a_rest; a_rest &= a_rest - 1) {
        const int a = std::countr_zero(a_rest);
        if (a < min_first)
            continue;
        for (Mask b_rest = pool & ~((Mask{2} << a) - 1); b_rest; b_rest &= b_rest - 1) {
            const int b = std::countr_zero(b_rest);
            pairs.emplace_back(a, b);
            const bool stop = for_each_pairing(pool & ~(Mask{1} << a) & ~(Mask{1} << b), pairs, visit);
            pairs.pop_back();
            if (stop)
                return true;
        }
    }
    return false;
}

}  // namespace

WinSystem vertex_cover_game(const Graph& core) {
    auto adj = std::make_shared<const std::vector<Mask>>(adjacency_masks(core));
    WinSystem sys;
    sys.board_size = core.order();
    sys.maker_done = [adj](Mask m) {
        const auto& a = *adj;
        for (std::size_t v = 0; v < a.size(); ++v)
            if (!(m >> v & 1) && (a[v] & ~m))
                return false;
        return true;
    };
    sys.breaker_done = [adj](Mask b) {
        for (Mask rest = b; rest; rest &= rest - 1)
            if ((*adj)[std::countr_zero(rest)] & b)
                return true;
        return false;
    };
    sys.order_moves = [adj](const GameState& s, std::vector<Vertex>& moves) {
        const auto& a = *adj;
        auto residual = [&](Vertex v) {
            // v itself is free, so an edge is uncovered iff the other end is not Maker's.
            return std::popcount(a[v] & ~s.maker);
        };
        std::stable_sort(moves.begin(), moves.end(),
                         [&](Vertex x, Vertex y) { return residual(x) > residual(y); });
    };
    return sys;
}

WinSystem strong_resolving_game(const Graph& g) {
    return predicate_game(g, &strongly_resolves);
}

WinSystem resolving_game(const Graph& g) {
    return predicate_game(g, &resolves);
}

Outcome outcome_srg_exact(const SrGraph& sr, int limit) {
    if (sr.core.order() == 0)
        throw PreconditionError("empty strong resolving graph");
    return solve_outcome(vertex_cover_game(sr.core), limit);
}

Outcome outcome_srg_exact(const Graph& g, int limit) {
    return outcome_srg_exact(strong_resolving_graph(g), limit);
}

Outcome outcome_rg_exact(const Graph& g, int limit) {
    if (g.order() > limit)
        throw LimitExceeded("MBRG board limited to " + std::to_string(limit) + " vertices, got " +
                            std::to_string(g.order()));
    return solve_outcome(resolving_game(g), limit);
}

Outcome outcome_srg_classifier(const Graph& core) {
    if (core.order() == 0)
        throw PreconditionError("empty strong resolving graph");
    if (core.max_degree() <= 1)
        return Outcome::M;
    // Is there a vertex whose deletion leaves max degree <= 1?
    for (Vertex u = 0; u < core.order(); ++u) {
        bool ok = true;
        for (Vertex v = 0; v < core.order() && ok; ++v) {
            if (v == u)
                continue;
            const int deg = core.degree(v) - (core.adjacent(u, v) ? 1 : 0);
            ok = deg <= 1;
        }
        if (ok)
            return Outcome::N;
    }
    return Outcome::B;
}

Outcome outcome_srg_classifier(const SrGraph& sr) {
    return outcome_srg_classifier(sr.core);
}

bool is_pairing_vertex_cover(const Graph& core, const std::vector<VertexPair>& pairs, int limit) {
    check_pairs(core, pairs, limit);
    return all_transversals_cover(adjacency_masks(core), pairs, 0);
}

bool is_pairing_vertex_cover(const SrGraph& sr, const std::vector<VertexPair>& pairs, int limit) {
    return is_pairing_vertex_cover(sr.core, pairs, limit);
}

bool is_quasi_pairing_vertex_cover(const Graph& core, const std::vector<VertexPair>& pairs,
                                   Vertex extra, int limit) {
    check_pairs(core, pairs, limit);
    if (extra < 0 || extra >= core.order())
        throw PreconditionError("quasi-pairing: extra vertex outside the SR core");
    for (auto [a, b] : pairs)
        if (a == extra || b == extra)
            throw PreconditionError("quasi-pairing: extra vertex lies in a pair");
    return all_transversals_cover(adjacency_masks(core), pairs, Mask{1} << extra);
}

bool is_quasi_pairing_vertex_cover(const SrGraph& sr, const std::vector<VertexPair>& pairs,
                                   Vertex extra, int limit) {
    return is_quasi_pairing_vertex_cover(sr.core, pairs, extra, limit);
}

std::optional<PairingCertificate> find_pairing_vertex_cover(const Graph& core, int max_order) {
    if (core.order() > max_order)
        throw LimitExceeded("pairing search limited to " + std::to_string(max_order) + " vertices");
    const auto adj = adjacency_masks(core);
    const Mask all = (Mask{1} << core.order()) - 1;
    std::vector<VertexPair> pairs;
    std::optional<PairingCertificate> found;
    for_each_pairing(all, pairs, [&](const std::vector<VertexPair>& p) {
        if (all_transversals_cover(adj, p, 0)) {
            found = PairingCertificate{p, std::nullopt};
            return true;
        }
        return false;
    });
    return found;
}

std::optional<PairingCertificate> find_quasi_pairing_vertex_cover(const Graph& core, int max_order) {
    if (core.order() > max_order)
        throw LimitExceeded("pairing search limited to " + std::to_string(max_order) + " vertices");
    const auto adj = adjacency_masks(core);
    const Mask all = (Mask{1} << core.order()) - 1;
    std::optional<PairingCertificate> found;
    for (Vertex extra = 0; extra < core.order() && !found; ++extra) {
        std::vector<VertexPair> pairs;
        for_each_pairing(all & ~(Mask{1} << extra), pairs, [&](const std::vector<VertexPair>& p) {
            if (all_transversals_cover(adj, p, Mask{1} << extra)) {
                found = PairingCertificate{p, extra};
                return true;
            }
            return false;
        });
    }
    return found;
}

std::pair<Outcome, Outcome> compare_outcomes(const Graph& g, const Limits& limits) {
    const Outcome sr = outcome_srg_exact(g, limits.game_board);
    const Outcome r = outcome_rg_exact(g, limits.rg_board);
    if (sr > r)
        throw std::logic_error("O_SR exceeds O_R");
    return {sr, r};
}

}  // namespace mbsr
