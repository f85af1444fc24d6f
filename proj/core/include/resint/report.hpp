#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace resint {

struct RunOptions {
    std::optional<long long> char_override;
    std::optional<std::uint64_t> seed_override;
    std::optional<int> limit_degree;
    std::optional<long long> limit_pairs;
    bool include_timing = false;  // timing breaks byte-for-byte reproducibility
    std::string cache_dir;        // empty: RESINT_CACHE_DIR or no disk cache
    int threads = 1;
};

struct RunResult {
    std::string report_json;
    std::string summary;
    int exit_code = 0;  // 0 ok, 1 hypothesis failed, 2 parse, 3 resource, 4 cross-check
};

// command dispatcher behind the CLI; commands: analyze, colon, classify,
// kitt, tau, certify, ericci, layout, hilbert, koszul, invariants
RunResult run_command(const std::string& command, const std::string& problem_text,
                      const RunOptions& opt = {});

}  // namespace resint
