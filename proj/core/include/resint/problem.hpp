#pragma once

#include <cstdint>
#include <optional>

#include "resint/ideal.hpp"

namespace resint {

struct GeneralSpec {
    int count = 0;
    int degree = 0;
    std::uint64_t seed = 1;
};

struct ProblemFile {
    Ambient amb;
    std::vector<Polynomial> ideal_gens;
    std::optional<std::vector<Polynomial>> a_explicit;
    std::optional<GeneralSpec> a_general;
    std::vector<std::string> analyses;
    GBConfig limits;
};

struct ProblemOverrides {
    std::optional<long long> characteristic;
    std::optional<std::uint64_t> seed;
    std::optional<int> limit_degree;
    std::optional<long long> limit_pairs;
};

// JSON problem file (schema resint-problem/1); throws parse_error with
// line/column on malformed input
ProblemFile parse_problem(const std::string& text, const ProblemOverrides& ov = {});

}  // namespace resint
