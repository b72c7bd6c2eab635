#pragma once

#include <cstdint>

#include "linkcert/engines.hpp"

namespace linkcert {

// Seeded uniform integer coordinates in [0, range)^3, resampling any point
// that breaks general position. Identical (n, seed, range) gives identical
// output; throws after retry_cap failed samples.
Embedding random_embedding(int n, std::uint64_t seed, const BigInt& range = BigInt(1000000),
                           int retry_cap = 10000);

struct CampaignSpec {
    std::string theorem;       // engine id, e.g. "k6-nonsplit-odd", "mod3"
    int n = 0;                 // embedding size; 0 = engine requirement
    int trials = 1;
    std::uint64_t seed = 0;
    BigInt range = BigInt(1000000);
    SearchBudget budget;
    std::string out_dir;       // empty = keep artifacts in memory only
    int workers = 0;           // 0 = env LINKCERT_WORKERS, then hardware
};

struct TrialOutcome {
    int index = 0;
    std::string outcome;       // "certificate" | "exhausted" | "error"
    std::string detail;
    double millis = 0.0;
    std::string cert_path;
    std::string certificate_json;  // populated when out_dir is empty
};

struct CampaignReport {
    CampaignSpec spec;
    std::vector<TrialOutcome> trials;
    int certificates = 0;
    int exhausted = 0;
    int errors = 0;

    std::string to_csv() const;  // one row per trial: index,outcome,millis,certPath
};

// Generates one embedding per trial, runs the engine, re-verifies every
// certificate from scratch, and persists artifacts. Trials are independent
// and run concurrently; the report only depends on the spec.
CampaignReport run_campaign(const CampaignSpec& spec);

std::uint64_t trial_seed(std::uint64_t campaign_seed, int trial_index);

}  // namespace linkcert
