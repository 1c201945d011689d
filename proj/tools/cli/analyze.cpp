#include "analyze.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "mbsr/distance.hpp"
#include "mbsr/error.hpp"
#include "mbsr/outcome.hpp"
#include "mbsr/shape.hpp"

namespace mbsr::cli {

namespace {

// Runs one stage, recording its time; LimitExceeded marks it skipped.
void stage(AnalysisReport& r, const std::string& name, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    StageResult s{name, 0, std::nullopt};
    try {
        body();
    } catch (const LimitExceeded&) {
        s.skipped = "limit";
    }
    s.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.stages.push_back(std::move(s));
}

std::string join_ids(const std::vector<Vertex>& vs) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < vs.size(); ++i)
        out << (i ? "," : "") << vs[i];
    out << '}';
    return out.str();
}

std::string opt_outcome(const std::optional<Outcome>& o) {
    return o ? std::string(to_string(*o)) : "skipped: limit";
}

}  // namespace

AnalysisReport analyze_graph(const Graph& g, std::string source, const AnalyzeOptions& opts) {
    if (g.order() < 2)
        throw PreconditionError("analyze: graph must have at least 2 vertices");
    const DistanceMatrix d = all_pairs_distances(g);
    if (!d.connected())
        throw PreconditionError("analyze: graph is disconnected");

    AnalysisReport r;
    r.source = std::move(source);
    r.n = g.order();
    r.m = g.size();
    r.diameter = d.diameter();

    SrGraph sr;
    stage(r, "sr_graph", [&] {
        sr = strong_resolving_graph(g, d);
        r.sr_order = sr.core.order();
        r.sr_size = sr.core.size();
        r.sr_shape = classify_shape(sr.core, opts.limits.isomorphism).to_string();
    });
    stage(r, "sdim", [&] {
        r.sdim = strong_metric_dimension(g, opts.limits.vertex_cover);
    });
    stage(r, "dim", [&] {
        auto dim = metric_dimension(g, opts.limits.metric_dimension);
        if (!is_resolving_set(g, dim.witness))
            throw std::logic_error("metric dimension witness does not resolve");
        r.dim = std::move(dim);
    });
    stage(r, "outcome_classifier", [&] { r.outcome_classifier = outcome_srg_classifier(sr); });
    stage(r, "outcome_exact", [&] {
        if (sr.core.order() > opts.limits.game_board)
            throw LimitExceeded("SR board");
        r.outcome_exact = outcome_srg_exact(sr, opts.limits.game_board);
    });
    if (opts.with_rg)
        stage(r, "outcome_r", [&] { r.outcome_r = outcome_rg_exact(g, opts.limits.rg_board); });

    if (r.outcome_exact && r.outcome_classifier && *r.outcome_exact != *r.outcome_classifier)
        r.defect = "classifier " + std::string(to_string(*r.outcome_classifier)) + " != exact " +
                   std::string(to_string(*r.outcome_exact));
    return r;
}

std::string render_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "graph: " << r.source << "\n";
    out << "n = " << r.n << ", m = " << r.m << ", diameter = " << r.diameter << "\n";
    out << "SR graph: " << r.sr_shape << " (" << r.sr_order << " vertices, " << r.sr_size << " edges)\n";
    if (r.sdim)
        out << "sdim = " << r.sdim->size << "  witness " << join_ids(r.sdim->witness) << "\n";
    else
        out << "sdim: skipped: limit\n";
    if (r.dim)
        out << "dim = " << r.dim->size << "  witness " << join_ids(r.dim->witness) << "\n";
    else
        out << "dim: skipped: limit\n";
    out << "O_SR (exact) = " << opt_outcome(r.outcome_exact) << "\n";
    out << "O_SR (classifier) = " << opt_outcome(r.outcome_classifier) << "\n";
    if (r.outcome_r || std::any_of(r.stages.begin(), r.stages.end(),
                                   [](const StageResult& s) { return s.stage == "outcome_r"; }))
        out << "O_R = " << opt_outcome(r.outcome_r) << "\n";
    if (r.defect)
        out << "DEFECT: " << *r.defect << "\n";
    out << "timing (ms):";
    for (const auto& s : r.stages) {
        out << " " << s.stage << "=";
        if (s.skipped)
            out << "skipped";
        else
            out << static_cast<long long>(s.millis + 0.5);
    }
    out << "\n";
    return out.str();
}

nlohmann::json to_json(const AnalysisReport& r) {
    using nlohmann::json;
    auto outcome = [](const std::optional<Outcome>& o) -> json {
        return o ? json(std::string(to_string(*o))) : json("skipped: limit");
    };
    auto witness = [](const std::optional<SizedWitness>& w) -> json {
        if (!w)
            return "skipped: limit";
        return json{{"size", w->size}, {"witness", w->witness}};
    };
    json stages = json::array();
    for (const auto& s : r.stages) {
        json j{{"stage", s.stage}, {"millis", s.millis}};
        if (s.skipped)
            j["skipped"] = *s.skipped;
        stages.push_back(std::move(j));
    }
    json out{{"source", r.source},
             {"n", r.n},
             {"m", r.m},
             {"diameter", r.diameter},
             {"sr_shape", r.sr_shape},
             {"sr_order", r.sr_order},
             {"sr_size", r.sr_size},
             {"sdim", witness(r.sdim)},
             {"dim", witness(r.dim)},
             {"outcome_exact", outcome(r.outcome_exact)},
             {"outcome_classifier", outcome(r.outcome_classifier)},
             {"stages", std::move(stages)}};
    if (std::any_of(r.stages.begin(), r.stages.end(), [](const StageResult& s) { return s.stage == "outcome_r"; }))
        out["outcome_r"] = outcome(r.outcome_r);
    if (r.defect)
        out["defect"] = *r.defect;
    return out;
}

}  // namespace mbsr::cli
