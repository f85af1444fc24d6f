#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "resint/oracle.hpp"
#include "resint/parser.hpp"
#include "resint/report.hpp"
#include "resint/version.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// hidden helper for minting expected values; not part of the public surface
int run_oracle(const std::vector<std::string>& args) {
    using namespace resint;
    if (args.size() < 3) {
        std::cerr << "usage: resint oracle <membership|hilbert|det> <vars,comma-sep> <char> ...\n";
        return 2;
    }
    std::string what = args[0];
    std::vector<std::string> vars;
    {
        std::stringstream ss(args[1]);
        std::string v;
        while (std::getline(ss, v, ',')) vars.push_back(v);
    }
    long long p = std::stoll(args[2]);
    RingPtr ring = PolyRing::make(vars, p);
    if (what == "membership") {
        // resint oracle membership x,y 0 "y^3" "x^2+y^2;x*y" 6
        Polynomial target = parse_polynomial(args.at(3), ring);
        std::vector<Polynomial> gens;
        std::stringstream ss(args.at(4));
        std::string g;
        while (std::getline(ss, g, ';')) gens.push_back(parse_polynomial(g, ring));
        int D = std::stoi(args.at(5));
        std::cout << (oracle::membership(target, gens, D) ? "true" : "false") << "\n";
        return 0;
    }
    if (what == "hilbert") {
        std::vector<Polynomial> gens;
        if (!args.at(3).empty()) {
            std::stringstream ss(args.at(3));
            std::string g;
            while (std::getline(ss, g, ';')) gens.push_back(parse_polynomial(g, ring));
        }
        int D = std::stoi(args.at(4));
        auto vals = oracle::hilbert(ring, gens, D);
        for (std::size_t i = 0; i < vals.size(); ++i)
            std::cout << (i ? "," : "") << vals[i];
        std::cout << "\n";
        return 0;
    }
    if (what == "det") {
        // rows separated by '|', entries by ';'
        std::vector<std::vector<Polynomial>> m;
        std::stringstream rows(args.at(3));
        std::string row;
        while (std::getline(rows, row, '|')) {
            std::vector<Polynomial> r;
            std::stringstream es(row);
            std::string e;
            while (std::getline(es, e, ';')) r.push_back(parse_polynomial(e, ring));
            m.push_back(std::move(r));
        }
        std::cout << oracle::determinant(m).to_string() << "\n";
        return 0;
    }
    std::cerr << "unknown oracle '" << what << "'\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    // hidden oracle entry
    if (argc >= 2 && std::string(argv[1]) == "oracle") {
        std::vector<std::string> args(argv + 2, argv + argc);
        try {
            return run_oracle(args);
        } catch (const std::exception& e) {
            std::cerr << "oracle error: " << e.what() << "\n";
            return 2;
        }
    }

    CLI::App app{"residual intersection toolkit"};
    app.set_version_flag("--version", resint::kEngineVersion);
    std::string command, problem_path, out_path, cache_dir;
    long long char_override = -1;
    long long seed = -1;
    int limit_degree = -1;
    long long limit_pairs = -1;
    bool timing = false;
    app.add_option("command", command,
                   "analyze|colon|classify|kitt|tau|certify|ericci|layout|hilbert|koszul|invariants")
        ->required();
    app.add_option("problem", problem_path, "problem JSON file")->required();
    app.add_option("--seed", seed, "override the seed of a general a-block");
    app.add_option("--char", char_override, "override the coefficient characteristic");
    app.add_option("--out", out_path, "write the JSON report here");
    app.add_option("--limit-degree", limit_degree, "hard cap on polynomial degrees");
    app.add_option("--limit-pairs", limit_pairs, "hard cap on S-pairs");
    app.add_option("--cache-dir", cache_dir, "on-disk basis cache (or RESINT_CACHE_DIR)");
    app.add_flag("--timing", timing, "include timing in the JSON report");
    CLI11_PARSE(app, argc, argv);

    resint::RunOptions opt;
    if (char_override >= 0) opt.char_override = char_override;
    if (seed >= 0) opt.seed_override = static_cast<std::uint64_t>(seed);
    if (limit_degree >= 0) opt.limit_degree = limit_degree;
    if (limit_pairs >= 0) opt.limit_pairs = limit_pairs;
    opt.include_timing = timing;
    opt.cache_dir = cache_dir;
    if (const char* th = std::getenv("RESINT_THREADS")) opt.threads = std::max(1, std::atoi(th));

    resint::RunResult res = resint::run_command(command, slurp(problem_path), opt);
    if (out_path.empty()) {
        std::cerr << res.summary;
        std::cout << res.report_json;
    } else {
        std::ofstream out(out_path);
        out << res.report_json;
        std::cout << res.summary;
    }
    return res.exit_code;
}
