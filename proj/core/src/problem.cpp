#include "resint/problem.hpp"

#include <json.hpp>

#include "resint/version.hpp"

namespace resint {

namespace {

using nlohmann::json;

[[noreturn]] void fail_at_offset(const std::string& text, std::size_t byte, const std::string& msg) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') { ++line; col = 1; }
        else ++col;
    }
    throw parse_error(msg, line, col);
}

}  // namespace

ProblemFile parse_problem(const std::string& text, const ProblemOverrides& ov) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail_at_offset(text, e.byte ? e.byte - 1 : 0, "problem file is not valid JSON");
    }
    try {
        ProblemFile pf;
        if (j.contains("schema") && j["schema"].get<std::string>() != kProblemSchema)
            throw parse_error("unsupported problem schema " + j["schema"].get<std::string>(), 1, 1);
        if (!j.contains("ring")) throw parse_error("missing \"ring\" block", 1, 1);
        const json& ring = j["ring"];
        std::vector<std::string> vars = ring.at("variables").get<std::vector<std::string>>();
        std::vector<int> weights;
        if (ring.contains("weights")) weights = ring["weights"].get<std::vector<int>>();
        long long characteristic = 0;
        if (ring.contains("characteristic")) characteristic = ring["characteristic"].get<long long>();
        if (ov.characteristic) characteristic = *ov.characteristic;
        RingPtr P;
        try {
            P = PolyRing::make(vars, characteristic, weights);
        } catch (const error& e) {
            throw parse_error(e.what(), 1, 1);
        }
        std::vector<Polynomial> quot;
        if (ring.contains("quotient"))
            for (const auto& s : ring["quotient"])
                quot.push_back(parse_polynomial(s.get<std::string>(), P));
        pf.amb = Ambient(P, std::move(quot));
        if (ring.contains("equidimensional"))
            pf.amb.equidim = ring["equidimensional"].get<bool>() ? 1 : 0;
        if (!j.contains("ideal")) throw parse_error("missing \"ideal\" block", 1, 1);
        for (const auto& s : j["ideal"])
            pf.ideal_gens.push_back(parse_polynomial(s.get<std::string>(), P));
        if (j.contains("a")) {
            const json& a = j["a"];
            if (a.contains("generators")) {
                std::vector<Polynomial> gens;
                for (const auto& s : a["generators"])
                    gens.push_back(parse_polynomial(s.get<std::string>(), P));
                pf.a_explicit = std::move(gens);
            } else {
                GeneralSpec gs;
                gs.count = a.at("count").get<int>();
                gs.degree = a.at("degree").get<int>();
                if (a.contains("seed")) gs.seed = a["seed"].get<std::uint64_t>();
                pf.a_general = gs;
            }
        }
        if (ov.seed && pf.a_general) pf.a_general->seed = *ov.seed;
        if (j.contains("analyses"))
            pf.analyses = j["analyses"].get<std::vector<std::string>>();
        if (j.contains("limits")) {
            if (j["limits"].contains("max_degree"))
                pf.limits.max_degree = j["limits"]["max_degree"].get<int>();
            if (j["limits"].contains("max_pairs"))
                pf.limits.max_pairs = j["limits"]["max_pairs"].get<long long>();
        }
        if (ov.limit_degree) pf.limits.max_degree = *ov.limit_degree;
        if (ov.limit_pairs) pf.limits.max_pairs = *ov.limit_pairs;
        return pf;
    } catch (const json::exception& e) {
        throw parse_error(std::string("malformed problem file: ") + e.what(), 1, 1);
    }
}

}  // namespace resint
