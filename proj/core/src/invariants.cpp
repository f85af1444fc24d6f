#include "resint/invariants.hpp"

namespace resint {

int dim_of_ring(const Ambient& amb, const GBConfig& cfg) {
    return series_dimension(hilbert_series_ring(amb, cfg));
}

int dim_of_quotient(const Ideal& J, const GBConfig& cfg) {
    return series_dimension(hilbert_series_quotient(J, cfg));
}

int height(const Ideal& J, const GBConfig& cfg) {
    const Ambient& amb = J.ambient();
    if (amb.is_quotient() && amb.equidim != 1) {
        if (amb.equidim == 0)
            throw hypothesis_error("height needs an equidimensional ambient");
        Ideal Q(Ambient(amb.P), amb.quotient);
        if (!unmixed_check(Q, cfg))
            throw hypothesis_error(
                "ambient quotient is not unmixed; height via dimension needs equidimensionality");
    }
    int dR = dim_of_ring(amb, cfg);
    int dRJ = dim_of_quotient(J, cfg);
    if (dRJ < 0) return kHeightInfinity;  // unit ideal
    return dR - dRJ;
}

DepthInfo depth_pd_reg(const Subquotient& M, const GBConfig& cfg) {
    DepthInfo info;
    Resolution res = minimal_free_resolution(M, cfg);
    if (res.F0.rank() == 0) {
        info.zero_module = true;
        info.depth = static_cast<int>(M.amb.P->nvars());
        return info;
    }
    info.pd = res.length();
    info.depth = static_cast<int>(M.amb.P->nvars()) - info.pd;
    info.reg = betti_table(res).regularity();
    return info;
}

DepthInfo depth_pd_reg(const Ideal& J, const GBConfig& cfg) {
    return depth_pd_reg(Subquotient::quotient_by_ideal(J), cfg);
}

std::vector<int> ext_dimension_profile(const Subquotient& M, const GBConfig& cfg) {
    // only dimensions are needed: HS(Ext^i) = HS(F_i*) - HS(im T_{i+1}) -
    // HS(im T_i), each image series a plain basis computation (no kernels)
    Resolution res = minimal_free_resolution(M, cfg);
    const RingPtr& P = M.amb.P;
    int n = static_cast<int>(P->nvars());
    int len = res.length();
    std::vector<FreeModule> dual(static_cast<std::size_t>(len) + 1);
    for (int i = 0; i <= len; ++i) {
        dual[static_cast<std::size_t>(i)] = res.module_at(i);
        for (auto& t : dual[static_cast<std::size_t>(i)].tw) t = -t;
        for (auto& t : dual[static_cast<std::size_t>(i)].tw2) t = -t;
    }
    // hs_im[i] = HS of im(T_i: F_{i-1}* -> F_i*), i = 1..len
    std::vector<HilbertSeries> hs_im(static_cast<std::size_t>(len) + 2);
    for (int i = 1; i <= len; ++i) {
        GradedMap T = res.diffs[static_cast<std::size_t>(i - 1)].transpose();
        HilbertSeries full = hilbert_series_free(dual[static_cast<std::size_t>(i)]);
        HilbertSeries quot = hilbert_series_free_quotient(
            P, dual[static_cast<std::size_t>(i)], T.columns_as_mvecs(), cfg);
        hs_im[static_cast<std::size_t>(i)] = hs_sub(full, quot);
    }
    std::vector<int> dims(static_cast<std::size_t>(n) + 1, -1);
    for (int i = 0; i <= len; ++i) {
        HilbertSeries hs = hilbert_series_free(dual[static_cast<std::size_t>(i)]);
        if (i + 1 <= len) hs = hs_sub(hs, hs_im[static_cast<std::size_t>(i + 1)]);
        if (i >= 1) hs = hs_sub(hs, hs_im[static_cast<std::size_t>(i)]);
        dims[static_cast<std::size_t>(i)] = series_dimension(hs);
    }
    return dims;
}

int grade_of(const Ideal& J, const GBConfig& cfg) {
    if (J.ambient().is_quotient())
        throw error("grade_of expects a polynomial ambient");
    if (is_unit_ideal(J, cfg)) throw error("grade of the unit ideal");
    auto dims = ext_dimension_profile(Subquotient::quotient_by_ideal(J), cfg);
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (dims[i] >= 0) return static_cast<int>(i);
    throw internal_check_error("no nonvanishing Ext found for a proper ideal");
}

namespace {

// codimension of M as a module over P
int codim_over_P(const Subquotient& M, const GBConfig& cfg) {
    int d = series_dimension(hilbert_series_subquotient(M, cfg));
    return static_cast<int>(M.amb.P->nvars()) - d;
}

}  // namespace

bool serre_condition(const Subquotient& M, int k, const GBConfig& cfg) {
    int n = static_cast<int>(M.amb.P->nvars());
    int c = codim_over_P(M, cfg);
    auto dims = ext_dimension_profile(M, cfg);
    for (int i = c + 1; i <= n; ++i) {
        int d = dims[static_cast<std::size_t>(i)];
        if (d < 0) continue;  // vanishing Ext passes
        if (d > n - i - k) return false;
    }
    return true;
}

bool serre_condition_ring(const Ambient& amb, int k, const GBConfig& cfg) {
    Ideal Q(Ambient(amb.P), amb.quotient);
    return serre_condition(Subquotient::quotient_by_ideal(Q), k, cfg);
}

bool cohen_macaulay(const Subquotient& M, const GBConfig& cfg) {
    int c = codim_over_P(M, cfg);
    auto dims = ext_dimension_profile(M, cfg);
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (dims[i] >= 0 && static_cast<int>(i) != c) return false;
    return true;
}

bool unmixed_check(const Subquotient& M, const GBConfig& cfg) {
    int n = static_cast<int>(M.amb.P->nvars());
    int c = codim_over_P(M, cfg);
    auto dims = ext_dimension_profile(M, cfg);
    // an associated prime of codimension i exists iff dim Ext^i = n - i
    for (int i = c + 1; i <= n; ++i) {
        int d = dims[static_cast<std::size_t>(i)];
        if (d >= 0 && d == n - i) return false;
    }
    return true;
}

bool unmixed_check(const Ideal& J, const GBConfig& cfg) {
    // of R/J as a P-module: lift J + Q
    const Ambient& amb = J.ambient();
    std::vector<Polynomial> gens = J.gens();
    gens.insert(gens.end(), amb.quotient.begin(), amb.quotient.end());
    Ideal lifted(Ambient(amb.P), std::move(gens));
    return unmixed_check(Subquotient::quotient_by_ideal(lifted), cfg);
}

InvariantReport invariant_report(const Ideal& J, const GBConfig& cfg) {
    InvariantReport rep;
    HilbertSeries hs = hilbert_series_quotient(J, cfg);
    rep.dim = series_dimension(hs);
    bool standard = true;
    for (int w : J.ambient().P->weights())
        if (w != 1) standard = false;
    rep.mult = (standard && rep.dim >= 0) ? series_multiplicity(hs) : 0;
    if (rep.mult < 0) rep.mult = -rep.mult;
    DepthInfo di = depth_pd_reg(J, cfg);
    rep.depth = di.depth;
    rep.pd = di.pd;
    rep.reg = di.reg;
    rep.height_J = height(J, cfg);
    return rep;
}

}  // namespace resint
