#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "mbsr/enumerate.hpp"
#include "mbsr/families.hpp"
#include "mbsr/graph_ops.hpp"
#include "mbsr/modular_sr.hpp"
#include "mbsr/outcome.hpp"
#include "mbsr/products.hpp"
#include "mbsr/shape.hpp"
#include "mbsr/vertex_cover.hpp"

namespace mbsr::cli {

namespace {

using Result = std::pair<std::string, std::string>;

std::string str(Outcome o) { return std::string(to_string(o)); }

// Exact outcome when the SR board fits the limit, classifier otherwise.
std::string outcome_of(const Graph& g, const Limits& limits) {
    const SrGraph sr = strong_resolving_graph(g);
    if (sr.core.order() <= limits.game_board)
        return str(outcome_srg_exact(sr, limits.game_board));
    return str(outcome_srg_classifier(sr));
}

std::string sizes(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

// Smallest strong resolving set by subset search, independent of G_SR.
int sdim_by_search(const Graph& g) {
    const DistanceMatrix d = all_pairs_distances(g);
    const int n = g.order();
    int best = n;
    for (Mask s = 0; s < (Mask{1} << n); ++s)
        if (std::popcount(s) < best && strongly_resolves(d, s))
            best = std::popcount(s);
    return best;
}

Outcome multipartite_expected(const std::vector<int>& parts) {
    int s = 0, threes = 0, max_part = 0;
    for (int a : parts) {
        s += a == 1;
        threes += a == 3;
        max_part = std::max(max_part, a);
    }
    if (s >= 4 || max_part >= 4)
        return Outcome::B;
    if ((s == 3 && threes >= 1) || threes >= 2)
        return Outcome::B;
    if (s == 3 || threes == 1)
        return Outcome::N;
    return Outcome::M;
}

int multipartite_sdim(const std::vector<int>& parts) {
    int n = 0, s = 0;
    for (int a : parts) {
        n += a;
        s += a == 1;
    }
    const int k = static_cast<int>(parts.size());
    return s == 0 ? n - k : n - k + s - 1;
}

void partitions(int total, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (total == 0) {
        if (cur.size() >= 2)
            out.push_back(cur);
        return;
    }
    for (int p = std::min(total, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(total - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> multipartite_instances(int max_total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    for (int total = 3; total <= max_total; ++total)
        partitions(total, total, cur, out);
    return out;
}

struct Named {
    std::string name;
    Graph g;
};

std::vector<Named> cartesian_factors() {
    return {{"P3", path(3)},   {"P4", path(4)},   {"K3", complete(3)}, {"K4", complete(4)},
            {"C4", cycle(4)},  {"C5", cycle(5)},  {"K1,3", star(3)}};
}

std::vector<Named> modular_factors() {
    const Graph paw(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    const Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    const Graph bull(5, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 4}});
    return {{"P3", path(3)},       {"P4", path(4)},     {"P5", path(5)},
            {"C4", cycle(4)},      {"C5", cycle(5)},    {"C6", cycle(6)},
            {"K1,3", star(3)},     {"paw", paw},        {"diamond", diamond},
            {"bull", bull},        {"co-P5", complement(path(5))},
            {"K1+P3", disjoint_union(complete(1), path(3))}};
}

// SR graph of the product relabeled on parent ids, as an edge list.
std::vector<Edge> parent_edges(const SrGraph& sr) {
    std::vector<Edge> out;
    for (const Edge& e : sr.core.edges())
        out.push_back(Edge{sr.to_parent[e.u], sr.to_parent[e.v]}.normalized());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

nlohmann::json CheckRecord::to_json() const {
    return {{"claim_id", claim_id}, {"instance", instance}, {"expected", expected},
            {"computed", computed}, {"pass", pass},         {"millis", millis}};
}

std::vector<Check> verification_catalogue(const VerifyOptions& opts) {
    const Limits limits = opts.limits;
    std::vector<Check> out;
    auto add = [&](std::string id, std::string inst, std::function<Result()> f) {
        out.push_back({std::move(id), std::move(inst), std::move(f)});
    };

    // Strong metric dimension formulas.
    for (int n = 2; n <= 12; ++n) {
        add("prop3.2/path-sdim", "P" + std::to_string(n),
            [=] { return Result{"1", std::to_string(strong_metric_dimension(path(n)).size)}; });
        add("prop3.2/complete-sdim", "K" + std::to_string(n), [=] {
            return Result{std::to_string(n - 1), std::to_string(strong_metric_dimension(complete(n)).size)};
        });
    }
    for (int n = 3; n <= 14; ++n)
        add("prop3.2b/cycle-sdim", "C" + std::to_string(n), [=] {
            return Result{std::to_string((n + 1) / 2), std::to_string(strong_metric_dimension(cycle(n)).size)};
        });
    add("prop3.2c/petersen-sdim", "Petersen",
        [] { return Result{"8", std::to_string(strong_metric_dimension(petersen()).size)}; });
    {
        Rng rng(opts.seed);
        std::uniform_int_distribution<int> order(2, 14);
        for (int i = 0; i < 20; ++i) {
            const Graph t = random_tree(order(rng), rng);
            add("prop3.2a/tree-sdim", "tree#" + std::to_string(i) + " n=" + std::to_string(t.order()), [t] {
                return Result{std::to_string(tree_stats(t).sigma - 1),
                              std::to_string(strong_metric_dimension(t).size)};
            });
        }
    }
    for (const auto& parts : multipartite_instances(8))
        add("prop3.2d/multipartite-sdim", "K" + sizes(parts), [=] {
            return Result{std::to_string(multipartite_sdim(parts)),
                          std::to_string(strong_metric_dimension(complete_multipartite(parts)).size)};
        });

    // Outcome tables.
    const std::vector<std::vector<int>> spiders = {{5}, {2, 1, 1}, {1, 1, 1, 1}, {2, 2, 1, 1, 1}, {1, 1, 1, 1, 1, 1}};
    for (const auto& legs : spiders) {
        const Graph t = legs.size() == 1 ? path(legs[0] + 1) : spider(legs);
        const int sigma = legs.size() == 1 ? 2 : static_cast<int>(legs.size());
        const std::string expected = sigma == 2 ? "M" : sigma == 3 ? "N" : "B";
        add("prop3.3a/tree", "sigma=" + std::to_string(sigma), [=] {
            return Result{expected, outcome_of(t, limits)};
        });
    }
    for (int n = 3; n <= 14; ++n) {
        const std::string expected = n % 2 == 0 ? "M" : n == 3 ? "N" : "B";
        add(n % 2 == 0 ? "prop3.3b/cycle-even" : "prop3.3b/cycle-odd", "C" + std::to_string(n),
            [=] { return Result{expected, outcome_of(cycle(n), limits)}; });
    }
    add("prop3.3c/petersen", "Petersen", [=] { return Result{"B", outcome_of(petersen(), limits)}; });
    for (const auto& parts : multipartite_instances(8))
        add("prop3.3d/multipartite", "K" + sizes(parts), [=] {
            return Result{str(multipartite_expected(parts)),
                          outcome_of(complete_multipartite(parts), limits)};
        });

    // Corona products.
    const std::vector<Named> corona_g = {{"P2", path(2)}, {"P3", path(3)}, {"K3", complete(3)},
                                         {"P4", path(4)}, {"C4", cycle(4)}, {"K1,3", star(3)}};
    const std::vector<Named> corona_h = {{"K1", complete(1)}, {"K2", complete(2)}, {"2K1", empty_graph(2)},
                                         {"P3", path(3)}, {"K3", complete(3)}};
    for (const auto& [gn, g] : corona_g)
        for (const auto& [hn, h] : corona_h) {
            const int n = g.order(), m = h.order();
            const std::string expected = n >= 4 ? "B" : n == 3 ? (m == 1 ? "N" : "B") : (m == 1 ? "M" : "B");
            add("prop3.4/corona", gn + " o " + hn,
                [=] { return Result{expected, outcome_of(corona(g, h), limits)}; });
        }
    for (int n = 1; n <= 8; ++n) {
        const std::string expected = (n == 1 || n == 3) ? "M" : (n == 2 || n == 4) ? "N" : "B";
        add("ex3.7/fan", "K1 o P" + std::to_string(n),
            [=] { return Result{expected, outcome_of(corona(complete(1), path(n)), limits)}; });
    }
    for (int n = 3; n <= 8; ++n)
        add("ex3.8/wheel", "K1 o C" + std::to_string(n), [=] {
            return Result{n == 4 ? "M" : "B", outcome_of(corona(complete(1), cycle(n)), limits)};
        });
    {
        const Graph k4e(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});  // degrees 2,3,3,2
        const std::vector<std::pair<Named, std::string>> cases = {
            {{"2K1", empty_graph(2)}, "M"},
            {{"K1+K2", disjoint_union(complete(1), complete(2))}, "N"},
            {{"K1+P3", disjoint_union(complete(1), path(3))}, "N"},
            {{"K1+C4", disjoint_union(complete(1), cycle(4))}, "N"},
            {{"K1+(K4-e)", disjoint_union(complete(1), k4e)}, "N"},
            {{"K1+K3", disjoint_union(complete(1), complete(3))}, "B"},
            {{"K1+P4", disjoint_union(complete(1), path(4))}, "B"},
            {{"K2+K2", disjoint_union(complete(2), complete(2))}, "B"},
            {{"3K1", empty_graph(3)}, "N"},
            {{"2K1+K2", disjoint_union(empty_graph(2), complete(2))}, "B"},
            {{"4K1", empty_graph(4)}, "B"},
            {{"2K1+2K2", disjoint_union(empty_graph(2), disjoint_copies(complete(2), 2))}, "B"},
        };
        for (const auto& [h, expected] : cases)
            add("prop3.6/corona-disconnected", "K1 o (" + h.name + ")",
                [=, g = h.g] { return Result{expected, outcome_of(corona(complete(1), g), limits)}; });
    }

    // Cartesian products.
    for (const auto& [gn, g] : cartesian_factors())
        for (const auto& [hn, h] : cartesian_factors()) {
            add("thm3.10/cartesian-sr", gn + " x " + hn, [=] {
                const SrGraph gs = strong_resolving_graph(g), hs = strong_resolving_graph(h);
                std::vector<Edge> expected;
                const int m = h.order();
                for (const Edge& a : gs.core.edges())
                    for (const Edge& b : hs.core.edges()) {
                        const Vertex ga = gs.to_parent[a.u], gb = gs.to_parent[a.v];
                        const Vertex ha = hs.to_parent[b.u], hb = hs.to_parent[b.v];
                        expected.push_back(Edge{product_vertex(ga, ha, m), product_vertex(gb, hb, m)}.normalized());
                        expected.push_back(Edge{product_vertex(ga, hb, m), product_vertex(gb, ha, m)}.normalized());
                    }
                std::sort(expected.begin(), expected.end());
                const auto computed = parent_edges(strong_resolving_graph(cartesian(g, h)));
                return Result{"G_SR x H_SR", computed == expected ? "G_SR x H_SR" : "differs"};
            });
            add("thm3.11/cartesian-outcome", gn + " x " + hn, [=] {
                const bool matchings = strong_resolving_graph(g).core.max_degree() == 1 &&
                                       strong_resolving_graph(h).core.max_degree() == 1;
                return Result{matchings ? "M" : "B", outcome_of(cartesian(g, h), limits)};
            });
        }

    // Modular products.
    add("cor3.22/c4-c6", "C4 <> C6", [=] {
        const SrGraph sr = modular_sr_by_theorem(cycle(4), cycle(6));
        return Result{"12K2 M", classify_shape(sr.core).to_string() + " " + str(outcome_srg_exact(sr, kMaxGameBoard))};
    });
    add("cor3.22/p5bar-p5", "co-P5 <> P5", [=] {
        const SrGraph sr = modular_sr_by_theorem(complement(path(5)), path(5));
        return Result{"10K2 ∪ P5 N",
                      classify_shape(sr.core).to_string() + " " + str(outcome_srg_exact(sr, kMaxGameBoard))};
    });
    add("cor3.22/p4-p4", "P4 <> P4", [=] {
        return Result{"B", str(outcome_srg_exact(modular_sr_by_theorem(path(4), path(4)), kMaxGameBoard))};
    });
    for (const auto& [gn, g] : modular_factors())
        for (const auto& [hn, h] : modular_factors()) {
            try {
                modular_sr_preconditions(g, h);
            } catch (const std::invalid_argument&) {
                continue;
            }
            add("thm3.14-3.20/modular-sr", gn + " <> " + hn, [=] {
                const auto method = std::string(to_string(modular_sr_method(g, h)));
                const bool same = parent_edges(modular_sr_by_theorem(g, h)) ==
                                  parent_edges(strong_resolving_graph(modular(g, h)));
                return Result{"equal", same ? "equal" : "differs (" + method + ")"};
            });
        }

    // O_SR versus O_R.
    const std::vector<std::tuple<std::string, Graph, std::string>> witnesses = {
        {"P6", path(6), "(M,M)"},
        {"K3", complete(3), "(N,N)"},
        {"K1,3", star(3), "(N,N)"},
        {"K1,4", star(4), "(B,B)"},
        {"spider(2,2,1)", spider({2, 2, 1}), "(N,M)"},
        {"spider(2,2,2,1)", spider({2, 2, 2, 1}), "(B,M)"},
        {"spider(2,1,1,1)", spider({2, 1, 1, 1}), "(B,N)"},
    };
    for (const auto& [name, g, expected] : witnesses)
        add("prop2.11/witness", name, [=] {
            const auto [sr, r] = compare_outcomes(g, limits);
            return Result{expected, "(" + str(sr) + "," + str(r) + ")"};
        });

    // Exhaustive sweeps.
    for (int n = 2; n <= opts.max_n; ++n) {
        add("classifier-vs-exact/exhaustive", "connected n=" + std::to_string(n), [=] {
            long total = 0, agree = 0;
            for_each_connected_graph(n, [&](const Graph& g) {
                const SrGraph sr = strong_resolving_graph(g);
                ++total;
                agree += outcome_srg_classifier(sr) == outcome_srg_exact(sr, limits.game_board);
                return true;
            });
            return Result{std::to_string(total) + "/" + std::to_string(total),
                          std::to_string(agree) + "/" + std::to_string(total)};
        });
        add("thm2.1/sdim-eq-tau", "connected n=" + std::to_string(n), [=] {
            long total = 0, agree = 0;
            for_each_connected_graph(n, [&](const Graph& g) {
                ++total;
                agree += sdim_by_search(g) == min_vertex_cover(strong_resolving_graph(g).core).size;
                return true;
            });
            return Result{std::to_string(total) + "/" + std::to_string(total),
                          std::to_string(agree) + "/" + std::to_string(total)};
        });
        if (n <= limits.rg_board)
            add("cor2.10/order", "connected n=" + std::to_string(n), [=] {
                long total = 0, ok = 0;
                for_each_connected_graph(n, [&](const Graph& g) {
                    ++total;
                    const Outcome sr = outcome_srg_exact(g, limits.game_board);
                    ok += sr <= outcome_rg_exact(g, limits.rg_board);
                    return true;
                });
                return Result{std::to_string(total) + "/" + std::to_string(total),
                              std::to_string(ok) + "/" + std::to_string(total)};
            });
    }
    add("classifier-vs-exact/random", "n=7..9 samples=" + std::to_string(opts.samples) + " seed=" + std::to_string(opts.seed),
        [=] {
            Rng rng(opts.seed ^ 0x5eedULL);
            std::uniform_int_distribution<int> order(7, 9);
            long agree = 0;
            for (int i = 0; i < opts.samples; ++i) {
                const SrGraph sr = strong_resolving_graph(random_connected_graph(order(rng), rng));
                agree += outcome_srg_classifier(sr) == outcome_srg_exact(sr, limits.game_board);
            }
            return Result{std::to_string(opts.samples) + "/" + std::to_string(opts.samples),
                          std::to_string(agree) + "/" + std::to_string(opts.samples)};
        });
    return out;
}

std::vector<CheckRecord> run_checks(const std::vector<Check>& checks, int workers) {
    std::vector<CheckRecord> records(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < checks.size(); i = next++) {
            CheckRecord& r = records[i];
            r.claim_id = checks[i].claim_id;
            r.instance = checks[i].instance;
            const auto start = std::chrono::steady_clock::now();
            try {
                std::tie(r.expected, r.computed) = checks[i].run();
                r.pass = r.expected == r.computed;
            } catch (const std::exception& e) {
                r.computed = std::string("error: ") + e.what();
                r.pass = false;
            }
            r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < std::max(1, workers); ++w)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return records;
}

int write_report(const std::vector<CheckRecord>& records, std::ostream& out) {
    int failures = 0;
    for (const auto& r : records) {
        out << r.to_json().dump() << "\n";
        failures += !r.pass;
    }
    return failures;
}

}  // namespace mbsr::cli
