#include "mbsr/vertex_cover.hpp"

#include <bit>
#include <vector>

#include "mbsr/error.hpp"

namespace mbsr {

namespace {

class CoverSearch {
public:
    explicit CoverSearch(const Graph& g) : adj_(g.order(), 0) {
        for (const Edge& e : g.edges()) {
            adj_[e.u] |= Mask{1} << e.v;
            adj_[e.v] |= Mask{1} << e.u;
        }
        const int n = g.order();
        alive_all_ = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
        best_ = alive_all_;  // V(G) always covers
        best_size_ = n;
    }

    SizedWitness run() {
        search(alive_all_, 0);
        return {best_size_, mask_to_vertices(best_)};
    }

private:
    std::vector<Mask> adj_;
    Mask alive_all_ = 0;
    Mask best_ = 0;
    int best_size_ = 0;

    int degree(Vertex v, Mask alive) const { return std::popcount(adj_[v] & alive); }

    // Size of a greedy maximal matching among alive vertices.
    int matching_bound(Mask alive) const {
        int size = 0;
        Mask free = alive;
        while (free) {
            const int v = std::countr_zero(free);
            free &= free - 1;
            const Mask nb = adj_[v] & free;
            if (nb) {
                free &= ~(nb & (~nb + 1));
                ++size;
            }
        }
        return size;
    }

    void search(Mask alive, Mask chosen) {
        // Reductions until fixpoint: drop isolated vertices, force the
        // neighbor of a degree-1 vertex.
        for (bool changed = true; changed;) {
            changed = false;
            for (Mask rest = alive; rest; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                if (!(alive >> v & 1))
                    continue;
                const Mask nb = adj_[v] & alive;
                if (nb == 0) {
                    alive &= ~(Mask{1} << v);
                    changed = true;
                } else if ((nb & (nb - 1)) == 0) {
                    chosen |= nb;
                    alive &= ~nb;
                    alive &= ~(Mask{1} << v);
                    changed = true;
                }
            }
        }
        const int taken = std::popcount(chosen);
        if (taken >= best_size_)
            return;
        if (alive == 0) {
            best_ = chosen;
            best_size_ = taken;
            return;
        }
        if (taken + matching_bound(alive) >= best_size_)
            return;

        Vertex pivot = -1;
        int pivot_deg = -1;
        for (Mask rest = alive; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const int dv = degree(v, alive);
            if (dv > pivot_deg) {
                pivot = v;
                pivot_deg = dv;
            }
        }
        const Mask pivot_bit = Mask{1} << pivot;
        search(alive & ~pivot_bit, chosen | pivot_bit);
        const Mask nb = adj_[pivot] & alive;
        search(alive & ~nb & ~pivot_bit, chosen | nb);
    }
};

}  // namespace

SizedWitness min_vertex_cover(const Graph& g, int limit) {
    const int n = g.order();
    if (n > limit || n > kMaskBits)
        throw LimitExceeded("min_vertex_cover limited to " + std::to_string(limit) + " vertices, got " +
                            std::to_string(n));
    return CoverSearch(g).run();
}

bool is_vertex_cover(const Graph& g, Mask cover) {
    for (const Edge& e : g.edges())
        if (!(cover >> e.u & 1) && !(cover >> e.v & 1))
            return false;
    return true;
}

}  // namespace mbsr
