#include "resint/symalg.hpp"

namespace resint {

namespace {

Subquotient sym_module(const SymPresentation& sym) {
    Ideal L = sym.L_ideal();
    Subquotient M = Subquotient::quotient_by_ideal(L);
    if (sym.S->bigraded()) {
        M.F.tw2.assign(static_cast<std::size_t>(M.F.rank()), 0);
    }
    return M;
}

SymBetti betti_from_resolution(const Resolution& res) {
    SymBetti out;
    out.betti = betti_table(res);
    out.pd = res.length();
    int treg = 0;
    for (const auto& [key, cnt] : out.betti.entries) {
        (void)cnt;
        if (key.second.size() >= 2) treg = std::max(treg, key.second[1] - key.first);
    }
    out.t_regularity = treg;
    return out;
}

}  // namespace

Ideal SymPresentation::t_ideal() const {
    std::vector<Polynomial> ts;
    for (int i = 0; i < r; ++i) ts.push_back(t_var(i));
    return Ideal(S_amb, std::move(ts));
}

SymPresentation symmetric_algebra(const Ambient& amb, const std::vector<Polynomial>& f,
                                  const GBConfig& cfg) {
    SymPresentation sym;
    sym.n_x = static_cast<int>(amb.P->nvars());
    sym.r = static_cast<int>(f.size());
    for (const auto& g : f) {
        if (g.is_zero() || !g.is_homogeneous())
            throw error("symmetric_algebra expects nonzero homogeneous generators");
        sym.d.push_back(g.degree());
    }
    // S = P[t_1..t_r]; first grading extends the base, t_i of weight deg f_i;
    // second grading is the t-degree
    std::vector<std::string> tnames;
    for (int i = 0; i < sym.r; ++i) tnames.push_back("t" + std::to_string(i + 1));
    std::vector<int> w2(amb.P->nvars(), 0);
    w2.resize(amb.P->nvars() + static_cast<std::size_t>(sym.r), 1);
    sym.S = extend_ring(amb.P, tnames, sym.d, w2);
    std::vector<Polynomial> liftedQ;
    for (const auto& q : amb.quotient) liftedQ.push_back(promote(q, sym.S));
    sym.S_amb = Ambient(sym.S, std::move(liftedQ));
    // presentation of I over R: columns of the first syzygy
    ModOrder plain;
    std::vector<MVec> cols;
    for (const auto& g : f) cols.push_back(MVec::from_poly(g, 0, amb.P, plain));
    FreeModule F1(amb.P, sym.d);
    GradedMap fmap = GradedMap::from_mvecs(FreeModule::of_rank(amb.P, 1),
                                           cols, sym.d);
    GradedMap syz = syzygy_kernel(fmap, amb, cfg);
    // trim the presentation in the graded case
    std::vector<MVec> pres = module_trim(amb, F1, syz.columns_as_mvecs(), {}, cfg);
    for (const auto& b : pres) {
        Polynomial ell = Polynomial::zero(sym.S);
        for (int i = 0; i < sym.r; ++i) {
            Polynomial bi = b.component(i, amb.P);
            if (bi.is_zero()) continue;
            ell = ell + promote(bi, sym.S) * sym.t_var(i);
        }
        if (!ell.is_zero()) sym.ell.push_back(ell);
    }
    return sym;
}

void attach_gamma(SymPresentation& sym, const std::vector<std::vector<Polynomial>>& Phi) {
    sym.gamma.clear();
    if (Phi.empty()) return;
    std::size_t s = Phi[0].size();
    for (std::size_t j = 0; j < s; ++j) {
        Polynomial g = Polynomial::zero(sym.S);
        for (int i = 0; i < sym.r; ++i) {
            const Polynomial& c = Phi[static_cast<std::size_t>(i)][j];
            if (c.is_zero()) continue;
            g = g + promote(c, sym.S) * sym.t_var(i);
        }
        sym.gamma.push_back(g);
    }
}

SymBetti sym_bigraded_betti(const Ambient& amb, const std::vector<Polynomial>& f,
                            const GBConfig& cfg) {
    if (amb.is_quotient())
        throw error("sym_bigraded_betti expects a polynomial base ring");
    SymPresentation sym = symmetric_algebra(amb, f, cfg);
    Resolution res = minimal_free_resolution(sym_module(sym), cfg);
    SymBetti out = betti_from_resolution(res);
    ProperSeqResult ps = proper_sequence_check(amb, f, cfg);
    if (ps.proper) {
        if (out.t_regularity != 0)
            throw internal_check_error(
                "proper sequence but t-regularity of Sym(I) is nonzero");
        // beta^S_i = sum_j beta^R_{i-j}(Z_j)
        KoszulData kd = koszul_complex(amb, f, cfg);
        std::map<int, long long> rhs;
        for (int j = 0; j < kd.r; ++j) {
            Subquotient Zj;
            Zj.amb = amb;
            Zj.F = kd.K[static_cast<std::size_t>(j)];
            Zj.gens = kd.Z[static_cast<std::size_t>(j)];
            if (subquotient_is_zero(Zj, cfg)) continue;
            Resolution rz = minimal_free_resolution(Zj, cfg);
            BettiTable bt = betti_table(rz);
            for (const auto& [key, cnt] : bt.entries) rhs[key.first + j] += cnt;
        }
        std::map<int, long long> lhs;
        for (const auto& [key, cnt] : out.betti.entries) lhs[key.first] += cnt;
        if (lhs != rhs)
            throw internal_check_error(
                "Betti identity for Sym(I) over a proper sequence failed");
    }
    return out;
}

std::optional<SymBetti> sym_betti_bounded(const Ambient& amb, const std::vector<Polynomial>& f,
                                          int max_len, const GBConfig& cfg) {
    SymPresentation sym = symmetric_algebra(amb, f, cfg);
    auto res = minimal_free_resolution_bounded(sym_module(sym), max_len, cfg);
    if (!res) return std::nullopt;
    return betti_from_resolution(*res);
}

}  // namespace resint
