#include "mbsr/distance.hpp"

#include <algorithm>
#include <deque>

namespace mbsr {

int DistanceMatrix::diameter() const {
    int best = 0;
    for (int d : dist_)
        best = std::max(best, d);
    return best;
}

int DistanceMatrix::eccentricity(Vertex v) const {
    int best = 0;
    for (Vertex u = 0; u < n_; ++u)
        best = std::max(best, (*this)(v, u));
    return best;
}

bool DistanceMatrix::connected() const {
    if (n_ == 0)
        return false;
    return std::none_of(dist_.begin(), dist_.end(), [](int d) { return d == kUnreachable; });
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    std::vector<int> dist(static_cast<std::size_t>(n) * n, DistanceMatrix::kUnreachable);
    std::vector<Vertex> queue(n);
    for (Vertex s = 0; s < n; ++s) {
        int* row = dist.data() + static_cast<std::size_t>(s) * n;
        row[s] = 0;
        std::size_t head = 0;
        std::size_t tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            Vertex u = queue[head++];
            for (Vertex w : g.neighbors(u)) {
                if (row[w] == DistanceMatrix::kUnreachable) {
                    row[w] = row[u] + 1;
                    queue[tail++] = w;
                }
            }
        }
    }
    return DistanceMatrix(n, std::move(dist));
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        queue.push_back(s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            out[id].push_back(u);
            for (Vertex w : g.neighbors(u))
                if (comp[w] < 0) {
                    comp[w] = id;
                    queue.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.order() > 0 && connected_components(g).size() == 1;
}

}  // namespace mbsr
