#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mbsr/game.hpp"
#include "mbsr/graph.hpp"
#include "mbsr/limits.hpp"
#include "mbsr/resolving.hpp"

namespace mbsr::cli {

struct StageResult {
    std::string stage;
    double millis = 0;
    std::optional<std::string> skipped;  // reason, e.g. "limit"
};

struct AnalysisReport {
    std::string source;
    int n = 0;
    int m = 0;
    int diameter = 0;
    std::string sr_shape;
    int sr_order = 0;
    int sr_size = 0;
    std::optional<SizedWitness> sdim;
    std::optional<SizedWitness> dim;
    std::optional<Outcome> outcome_exact;
    std::optional<Outcome> outcome_classifier;
    std::optional<Outcome> outcome_r;
    std::vector<StageResult> stages;
    /// Set when the classifier and the exact solver disagree.
    std::optional<std::string> defect;
};

struct AnalyzeOptions {
    Limits limits = kDefaultLimits;
    bool with_rg = true;
};

/// Throws PreconditionError for K1 or disconnected input.
AnalysisReport analyze_graph(const Graph& g, std::string source, const AnalyzeOptions& opts = {});

std::string render_text(const AnalysisReport& r);
nlohmann::json to_json(const AnalysisReport& r);

}  // namespace mbsr::cli
