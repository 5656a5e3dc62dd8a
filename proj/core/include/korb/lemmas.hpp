#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "korb/catalog.hpp"

namespace korb {

struct ClaimCheck {
    std::string claim;
    std::string group;
    // "pass", "fail" (with replayable witness), or "bounded-inconclusive"
    std::string verdict;
    std::string witness;
    std::int64_t checks = 0;
    std::string note;
    double runtime_sec = 0;  // reported in text output only
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    int jobs = 1;
    std::uint64_t cap = kDefaultCap;
    std::uint64_t qgdn_samples = 2000;
};

// Registered claim ids, in canonical order.
std::vector<std::string> all_claim_ids();

// One ClaimCheck per (claim, group) in scope; deterministic given the
// catalog order and seed regardless of `jobs`. Per-check budget overruns
// become bounded-inconclusive, never abort the suite.
std::vector<ClaimCheck> run_suite(const GroupCatalog& catalog,
                                  const std::vector<std::string>& claims,
                                  const SuiteOptions& options = {});

std::string suite_json_lines(const std::vector<ClaimCheck>& checks);
// Human summary table; states explicitly that the runs are bounded
// catalog evidence, not proofs of the general statements.
std::string suite_summary(const std::vector<ClaimCheck>& checks);
bool suite_all_pass(const std::vector<ClaimCheck>& checks);

}  // namespace korb
