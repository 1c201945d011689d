#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "mbsr/limits.hpp"

namespace mbsr::cli {

struct VerifyOptions {
    int max_n = 6;           // exhaustive sweeps cover 2..max_n
    int samples = 200;       // random graphs per sampled sweep
    std::uint64_t seed = 1;  // sampled sweeps only
    int workers = 1;
    Limits limits = kDefaultLimits;
};

struct CheckRecord {
    std::string claim_id;
    std::string instance;
    std::string expected;
    std::string computed;
    bool pass = false;
    double millis = 0;

    nlohmann::json to_json() const;
};

struct Check {
    std::string claim_id;
    std::string instance;
    /// Returns {expected, computed}.
    std::function<std::pair<std::string, std::string>()> run;
};

std::vector<Check> verification_catalogue(const VerifyOptions& opts);

/// Runs the checks on `opts.workers` threads and returns records in
/// catalogue order. A check that throws is recorded as failed.
std::vector<CheckRecord> run_checks(const std::vector<Check>& checks, int workers);

/// Writes one JSON object per line; returns the number of failures.
int write_report(const std::vector<CheckRecord>& records, std::ostream& out);

}  // namespace mbsr::cli
