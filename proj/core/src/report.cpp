#include "resint/report.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "resint/certificate.hpp"
#include "resint/problem.hpp"
#include "resint/version.hpp"

namespace resint {

namespace {

using nlohmann::json;

json ht_json(int h) {
    if (h == kHeightInfinity) return json("infinity");
    return json(h);
}

json poly_list(const std::vector<Polynomial>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(p.to_string());
    return a;
}

json layout_json(const GradedComplexLayout& lay) {
    json j;
    j["kind"] = lay.kind;
    json tw = json::array();
    for (const auto& row : lay.twists) tw.push_back(row);
    j["twists"] = tw;
    json ranks = json::array();
    for (int i = 0; i <= lay.length(); ++i) ranks.push_back(lay.rank(i));
    j["ranks"] = ranks;
    return j;
}

json cert_json(const FreeApproachCertificate& cert) {
    json j;
    j["issued"] = cert.issued;
    auto dump = [](const std::vector<CertCheck>& cs) {
        json a = json::array();
        for (const auto& c : cs) {
            json e;
            e["name"] = c.name;
            e["pass"] = c.pass;
            if (c.advisory) e["advisory"] = true;
            if (!c.evidence.empty()) e["evidence"] = c.evidence;
            a.push_back(e);
        }
        return a;
    };
    j["hypotheses"] = dump(cert.hypotheses);
    j["checks"] = dump(cert.checks);
    if (!cert.failure_summary.empty()) j["failed"] = cert.failure_summary;
    j["tau"] = poly_list(cert.tau.gens());
    j["J"] = poly_list(cert.J.gens());
    return j;
}

struct Ctx {
    ProblemFile pf;
    std::optional<ResidualInput> rin;
    GBConfig cfg;
    std::ostringstream summary;
};

ResidualInput& need_residual(Ctx& c) {
    if (!c.rin) {
        if (c.pf.a_explicit)
            c.rin = make_residual_input(c.pf.amb, c.pf.ideal_gens, *c.pf.a_explicit, c.cfg);
        else if (c.pf.a_general)
            c.rin = make_residual_input_general(c.pf.amb, c.pf.ideal_gens,
                                                c.pf.a_general->count, c.pf.a_general->degree,
                                                c.pf.a_general->seed, c.cfg);
        else
            throw error("this command needs an \"a\" block in the problem file");
    }
    return *c.rin;
}

json do_colon(Ctx& c) {
    ColonResult col = residual_colon(need_residual(c), c.cfg);
    json j;
    j["J"] = poly_list(col.J.gens());
    j["height"] = ht_json(col.height_J);
    j["proper"] = col.proper;
    if (!col.proper) j["flag"] = "not residual: colon is unit ideal";
    c.summary << "J = a : I has " << col.J.gens().size() << " generators, height "
              << (col.proper ? std::to_string(col.height_J) : std::string("infinity (unit)"))
              << "\n";
    return j;
}

json do_classify(Ctx& c) {
    ResidualInput& in = need_residual(c);
    ColonResult col = residual_colon(in, c.cfg);
    Classification cls = classify_residual(in, col.J, c.cfg);
    json j;
    j["algebraic"] = cls.algebraic;
    j["geometric"] = cls.geometric;
    j["arithmetic"] = cls.arithmetic;
    j["ht_J"] = ht_json(cls.ht_J);
    j["ht_I_plus_J"] = ht_json(cls.ht_I_plus_J);
    j["ht_fitting_locus"] = ht_json(cls.ht_fitt_locus);
    c.summary << "classification: " << (cls.algebraic ? "algebraic" : "none")
              << (cls.geometric ? ", geometric" : "") << (cls.arithmetic ? ", arithmetic" : "")
              << "\n";
    return j;
}

json do_kitt(Ctx& c) {
    ResidualInput& in = need_residual(c);
    KittChain chain = kitt_chain(in, c.cfg);
    json j;
    json levels = json::array();
    for (std::size_t i = 0; i < chain.levels.size(); ++i) {
        json lv;
        lv["index"] = i;
        lv["generators"] = poly_list(chain.levels[i].gens());
        lv["provenance"] = chain.provenance[i];
        levels.push_back(lv);
    }
    j["levels"] = levels;
    c.summary << "Kitt chain with " << chain.levels.size() << " levels, Kitt has "
              << chain.full().gens().size() << " generators\n";
    return j;
}

json do_tau(Ctx& c) {
    ResidualInput& in = need_residual(c);
    Ideal tau = tau_ideal(in, c.cfg);
    Ideal tau2 = tau_ideal_wedge_route(in, c.cfg);
    if (!ideal_equal(tau, tau2, c.cfg))
        throw internal_check_error("tau via minors and via wedges disagree");
    int mu = minimal_generator_count(tau, c.cfg);
    long long bound = in.s();
    {
        long long b = 1;
        bool ok = in.r() <= in.s();
        for (int i = 0; ok && i < in.r(); ++i) b = b * (in.s() - i) / (i + 1);
        bound += ok ? b : 0;
    }
    json j;
    j["generators"] = poly_list(tau.gens());
    j["mu"] = mu;
    j["mu_bound"] = bound;
    j["routes_agree"] = true;
    c.summary << "tau = a + I_r(Phi): mu(tau) = " << mu << " <= " << bound << "\n";
    return j;
}

json do_certify(Ctx& c, int* exit_code) {
    FreeApproachCertificate cert = free_approach_certificate(need_residual(c), c.cfg);
    if (!cert.issued && exit_code) *exit_code = 1;
    c.summary << "certificate " << (cert.issued ? "ISSUED" : "DENIED");
    if (!cert.issued) c.summary << " (" << cert.failure_summary << ")";
    c.summary << "\n";
    return cert_json(cert);
}

json do_ericci(Ctx& c) {
    ResidualInput& in = need_residual(c);
    EricciResult er = ericci(in.amb, in.d, in.l, in.seed ? in.seed : 1, c.cfg);
    json j;
    j["value"] = er.value;
    j["euler_route"] = er.euler_route;
    j["generic_route"] = er.generic_route;
    j["seed_used"] = er.seed_used;
    c.summary << "ericci = " << er.value << " (both routes)\n";
    return j;
}

json do_layout(Ctx& c) {
    ResidualInput& in = need_residual(c);
    json j;
    GradedComplexLayout F = f_complex_layout(in.r(), in.s(), in.d, in.l);
    j["F"] = layout_json(F);
    try {
        GradedComplexLayout Q = q_complex_layout(in, c.cfg);
        j["Q"] = layout_json(Q);
    } catch (const hypothesis_error& e) {
        j["Q_error"] = e.what();
    }
    c.summary << "F-layout ranks:";
    for (int i = 0; i <= F.length(); ++i) c.summary << " " << F.rank(i);
    c.summary << "\n";
    return j;
}

json do_hilbert(Ctx& c) {
    json j;
    HilbertSeries hsR = hilbert_series_ring(c.pf.amb, c.cfg);
    j["ring_series"] = hsR.to_string();
    json vals = json::array();
    Ideal I(c.pf.amb, c.pf.ideal_gens);
    HilbertSeries hsI = hilbert_series_quotient(I, c.cfg);
    j["quotient_series"] = hsI.to_string();
    for (int n = 0; n <= 15; ++n) vals.push_back(hilbert_function(hsI, n));
    j["quotient_values"] = vals;
    c.summary << "HS(R) = " << hsR.to_string() << "\nHS(R/I) = " << hsI.to_string() << "\n";
    return j;
}

json do_koszul(Ctx& c) {
    json j;
    KoszulData kd = koszul_complex(c.pf.amb, c.pf.ideal_gens, c.cfg);
    j["grade"] = kd.grade == kHeightInfinity ? json("infinity") : json(kd.grade);
    json hz = json::array(), zc = json::array();
    for (int i = 0; i <= kd.r; ++i) {
        hz.push_back(static_cast<bool>(kd.H_zero[static_cast<std::size_t>(i)]));
        zc.push_back(kd.Z[static_cast<std::size_t>(i)].size());
    }
    j["homology_zero"] = hz;
    j["cycle_generator_counts"] = zc;
    ProperSeqResult ps = proper_sequence_check(c.pf.amb, c.pf.ideal_gens, c.cfg);
    j["proper_sequence"] = ps.proper;
    if (!ps.proper) j["proper_witness"] = ps.witness;
    SlidingDepthResult sd = sliding_depth_check(c.pf.amb, c.pf.ideal_gens, 0,
                                                SlidingVariant::SD, c.cfg);
    SlidingDepthResult sdc = sliding_depth_check(c.pf.amb, c.pf.ideal_gens, 1,
                                                 SlidingVariant::SDC, c.cfg);
    j["SD"] = sd.holds;
    j["SDC_1"] = sdc.holds;
    c.summary << "Koszul: grade "
              << (kd.grade == kHeightInfinity ? std::string("infinity")
                                              : std::to_string(kd.grade))
              << ", proper sequence " << (ps.proper ? "yes" : "no") << ", SD "
              << (sd.holds ? "yes" : "no") << "\n";
    return j;
}

json do_invariants(Ctx& c) {
    ResidualInput& in = need_residual(c);
    ColonResult col = residual_colon(in, c.cfg);
    json j;
    if (!col.proper) {
        j["flag"] = "J is the unit ideal";
        return j;
    }
    InvariantReport rep = invariant_report(col.J, c.cfg);
    j["dim"] = rep.dim;
    j["multiplicity"] = rep.mult;
    j["depth"] = rep.depth;
    j["pd_over_P"] = rep.pd;
    j["regularity"] = rep.reg;
    j["height"] = ht_json(rep.height_J);
    j["methods"] = {{"dim", rep.method_dim},
                    {"multiplicity", rep.method_mult},
                    {"depth", rep.method_depth},
                    {"height", rep.method_height}};
    c.summary << "R/J: dim " << rep.dim << ", e " << rep.mult << ", depth " << rep.depth
              << ", reg " << rep.reg << ", ht(J) " << rep.height_J << "\n";
    return j;
}

json do_analyze(Ctx& c) {
    json j;
    j["colon"] = do_colon(c);
    j["classify"] = do_classify(c);
    j["kitt"] = do_kitt(c);
    j["tau"] = do_tau(c);
    j["certificate"] = do_certify(c, nullptr);
    j["layout"] = do_layout(c);
    j["invariants"] = do_invariants(c);
    ResidualInput& in = need_residual(c);
    Ideal tau = tau_ideal(in, c.cfg);
    RegularityBound rb = regularity_bound_check(in, tau, c.cfg);
    json reg;
    reg["lhs"] = rb.lhs;
    reg["rhs"] = rb.rhs;
    reg["holds"] = rb.holds;
    reg["hypotheses_ok"] = rb.hypotheses_ok;
    if (!rb.note.empty()) reg["note"] = rb.note;
    j["regularity_bound"] = reg;
    c.summary << "regularity bound: " << rb.lhs << " <= " << rb.rhs
              << (rb.holds ? " holds" : " FAILS") << "\n";
    return j;
}

}  // namespace

RunResult run_command(const std::string& command, const std::string& problem_text,
                      const RunOptions& opt) {
    RunResult out;
    json rep;
    rep["schema"] = kReportSchema;
    rep["engine"] = kEngineVersion;
    rep["command"] = command;
    auto t0 = std::chrono::steady_clock::now();
    std::string cache_dir = opt.cache_dir;
    if (cache_dir.empty()) {
        const char* env = std::getenv("RESINT_CACHE_DIR");
        if (env) cache_dir = env;
    }
    set_disk_cache_directory(cache_dir);
    reset_cache_stats();
    try {
        ProblemOverrides ov;
        ov.characteristic = opt.char_override;
        ov.seed = opt.seed_override;
        ov.limit_degree = opt.limit_degree;
        ov.limit_pairs = opt.limit_pairs;
        Ctx c;
        c.pf = parse_problem(problem_text, ov);
        c.cfg = c.pf.limits;
        // echo normalized inputs
        json input;
        input["ring"] = c.pf.amb.P->signature();
        if (c.pf.amb.is_quotient()) input["quotient"] = poly_list(c.pf.amb.quotient);
        input["ideal"] = poly_list(c.pf.ideal_gens);
        if (c.pf.a_explicit) input["a"] = poly_list(*c.pf.a_explicit);
        if (c.pf.a_general)
            input["a_general"] = {{"count", c.pf.a_general->count},
                                  {"degree", c.pf.a_general->degree},
                                  {"seed", c.pf.a_general->seed}};
        rep["input"] = input;
        if (c.pf.a_general) rep["seed"] = c.pf.a_general->seed;
        json result;
        if (command == "analyze") result = do_analyze(c);
        else if (command == "colon") result = do_colon(c);
        else if (command == "classify") result = do_classify(c);
        else if (command == "kitt") result = do_kitt(c);
        else if (command == "tau") result = do_tau(c);
        else if (command == "certify") result = do_certify(c, &out.exit_code);
        else if (command == "ericci") result = do_ericci(c);
        else if (command == "layout") result = do_layout(c);
        else if (command == "hilbert") result = do_hilbert(c);
        else if (command == "koszul") result = do_koszul(c);
        else if (command == "invariants") result = do_invariants(c);
        else throw error("unknown command '" + command + "'");
        rep["result"] = result;
        out.summary = c.summary.str();
    } catch (const parse_error& e) {
        rep["error"] = {{"kind", "parse"}, {"what", e.what()}};
        out.exit_code = 2;
        out.summary = std::string("parse error: ") + e.what() + "\n";
    } catch (const resource_limit_error& e) {
        rep["error"] = {{"kind", "resource-limit"}, {"what", e.what()}};
        out.exit_code = 3;
        out.summary = std::string("resource limit: ") + e.what() + "\n";
    } catch (const internal_check_error& e) {
        rep["error"] = {{"kind", "internal-cross-check"}, {"what", e.what()}};
        out.exit_code = 4;
        out.summary = std::string("internal cross-check disagreement: ") + e.what() + "\n";
    } catch (const hypothesis_error& e) {
        rep["error"] = {{"kind", "hypothesis"}, {"what", e.what()}};
        out.exit_code = 1;
        out.summary = std::string("hypothesis failed: ") + e.what() + "\n";
    } catch (const error& e) {
        rep["error"] = {{"kind", "usage"}, {"what", e.what()}};
        out.exit_code = 2;
        out.summary = std::string("error: ") + e.what() + "\n";
    }
    // the cache block is volatile across runs; only a disk cache is worth
    // reporting, and the default (no disk cache) keeps reports byte-identical
    if (disk_cache_active()) {
        CacheStats cs = cache_stats();
        rep["cache"] = {{"memory_hits", cs.memory_hits},
                        {"disk_hits", cs.disk_hits},
                        {"misses", cs.misses}};
    }
    rep["threads"] = opt.threads;
    if (opt.include_timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        rep["timing_ms"] = ms;
    }
    out.report_json = rep.dump(2) + "\n";
    return out;
}

}  // namespace resint
