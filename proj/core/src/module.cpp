#include "resint/module.hpp"

#include <sstream>

namespace resint {

namespace {

ModOrder plain_ord() { return ModOrder{}; }

int mvec_degree2(const MVec& v, const RingPtr& ring, const std::vector<int>& tw2) {
    int d = 0;
    bool any = false;
    for (const auto& t : v.terms()) {
        int x = ring->degree2(t.mon) + tw2[static_cast<std::size_t>(t.comp)];
        if (!any || x > d) d = x;
        any = true;
    }
    return d;
}

MVec reduce_entries_mod_Q(const MVec& v, const Ambient& amb, const GBConfig& cfg) {
    if (!amb.is_quotient()) return v;
    std::vector<MTerm> ts;
    int top = v.max_comp();
    for (int c = 0; c <= top; ++c) {
        Polynomial p = amb.reduce(v.component(c, amb.P), cfg);
        for (const auto& t : p.terms()) ts.push_back({t.mon, c, t.coef});
    }
    return MVec::make(amb.P, plain_ord(), std::move(ts));
}

}  // namespace

bool GradedMap::is_graded() const {
    for (int j = 0; j < ncols(); ++j)
        for (int i = 0; i < rows(); ++i) {
            const Polynomial& p = entry(i, j);
            if (p.is_zero()) continue;
            auto [deg, homog] = p.degree_info();
            if (!homog || *deg != src_.tw[static_cast<std::size_t>(j)] -
                                      dst_.tw[static_cast<std::size_t>(i)])
                return false;
            if (!src_.tw2.empty()) {
                if (!p.is_bihomogeneous()) return false;
                if (p.degree2() != src_.tw2[static_cast<std::size_t>(j)] -
                                       dst_.tw2[static_cast<std::size_t>(i)])
                    return false;
            }
        }
    return true;
}

bool GradedMap::is_zero() const {
    for (const auto& col : cols_)
        for (const auto& p : col)
            if (!p.is_zero()) return false;
    return true;
}

GradedMap GradedMap::transpose() const {
    FreeModule nsrc = dst_, ndst = src_;
    for (auto& t : nsrc.tw) t = -t;
    for (auto& t : nsrc.tw2) t = -t;
    for (auto& t : ndst.tw) t = -t;
    for (auto& t : ndst.tw2) t = -t;
    std::vector<std::vector<Polynomial>> cols(
        static_cast<std::size_t>(rows()),
        std::vector<Polynomial>(static_cast<std::size_t>(ncols())));
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < ncols(); ++j)
            cols[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry(i, j);
    return GradedMap(nsrc, ndst, std::move(cols));
}

std::vector<MVec> GradedMap::columns_as_mvecs() const {
    std::vector<MVec> out;
    out.reserve(cols_.size());
    for (const auto& col : cols_) out.push_back(MVec::from_column(col, src_.ring, plain_ord()));
    return out;
}

GradedMap GradedMap::from_mvecs(const FreeModule& dst, const std::vector<MVec>& cols,
                                const std::vector<int>& col_tw, const std::vector<int>& col_tw2) {
    FreeModule src(dst.ring, col_tw, col_tw2);
    std::vector<std::vector<Polynomial>> mat;
    mat.reserve(cols.size());
    for (const auto& v : cols) {
        std::vector<Polynomial> col;
        col.reserve(static_cast<std::size_t>(dst.rank()));
        for (int c = 0; c < dst.rank(); ++c) col.push_back(v.component(c, dst.ring));
        mat.push_back(std::move(col));
    }
    return GradedMap(std::move(src), dst, std::move(mat));
}

std::string GradedMap::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < rows(); ++i) {
        out << "[ ";
        for (int j = 0; j < ncols(); ++j) {
            if (j) out << ", ";
            out << entry(i, j).to_string();
        }
        out << " ]\n";
    }
    return out.str();
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
    if (f.src().rank() != g.dst().rank()) throw error("maps are not composable");
    std::vector<std::vector<Polynomial>> cols;
    cols.reserve(static_cast<std::size_t>(g.ncols()));
    for (int a = 0; a < g.ncols(); ++a) {
        std::vector<Polynomial> col(static_cast<std::size_t>(f.rows()),
                                    Polynomial::zero(f.src().ring));
        for (int c = 0; c < f.rows(); ++c) {
            Polynomial acc = Polynomial::zero(f.src().ring);
            for (int b = 0; b < f.ncols(); ++b) acc = acc + f.entry(c, b) * g.entry(b, a);
            col[static_cast<std::size_t>(c)] = std::move(acc);
        }
        cols.push_back(std::move(col));
    }
    return GradedMap(g.src(), f.dst(), std::move(cols));
}

Subquotient Subquotient::quotient_by_ideal(const Ideal& I) {
    Subquotient M;
    M.amb = I.ambient();
    M.F = FreeModule::of_rank(M.amb.P, 1);
    M.gens = {MVec::from_poly(Polynomial::one(M.amb.P), 0, M.amb.P, plain_ord())};
    for (const auto& g : I.gens())
        if (!g.is_zero()) M.rels.push_back(MVec::from_poly(g, 0, M.amb.P, plain_ord()));
    return M;
}

Subquotient Subquotient::ideal_as_module(const Ideal& I) {
    Subquotient M;
    M.amb = I.ambient();
    M.F = FreeModule::of_rank(M.amb.P, 1);
    for (const auto& g : I.gens())
        if (!g.is_zero()) M.gens.push_back(MVec::from_poly(g, 0, M.amb.P, plain_ord()));
    return M;
}

Subquotient Subquotient::ideal_pair(const Ideal& I, const Ideal& a) {
    Subquotient M = ideal_as_module(I);
    for (const auto& g : a.gens())
        if (!g.is_zero()) M.rels.push_back(MVec::from_poly(g, 0, M.amb.P, plain_ord()));
    return M;
}

Subquotient Subquotient::cokernel(const GradedMap& pres, const Ambient& amb) {
    Subquotient M;
    M.amb = amb;
    M.F = pres.dst();
    for (int c = 0; c < pres.dst().rank(); ++c) {
        std::vector<MTerm> ts{{Monomial(amb.P->nvars()), c, amb.P->field().one()}};
        M.gens.push_back(MVec::make(amb.P, plain_ord(), std::move(ts)));
    }
    M.rels = pres.columns_as_mvecs();
    return M;
}

std::vector<MVec> ambient_quotient_rels(const Ambient& amb, int rank) {
    std::vector<MVec> out;
    if (!amb.is_quotient()) return out;
    for (const auto& q : amb.quotient)
        for (int c = 0; c < rank; ++c)
            if (!q.is_zero()) out.push_back(MVec::from_poly(q, c, amb.P, plain_ord()));
    return out;
}

namespace {

// dispatch: Hilbert-truncated kernels for graded data, plain tagged run else
std::vector<MVec> kernel_gens(const RingPtr& P, const FreeModule& F,
                              const std::vector<MVec>& cols, const std::vector<MVec>& extra,
                              const GBConfig& cfg) {
    bool graded = true;
    for (const auto& c : cols)
        if (c.is_zero() || !c.homogeneous(P, F.tw)) { graded = false; break; }
    if (graded)
        for (const auto& q : extra)
            if (!q.homogeneous(P, F.tw)) { graded = false; break; }
    if (graded) return graded_syzygy_generators(P, F, cols, extra, cfg);
    return module_syzygies(P, F.rank(), cols, extra, cfg);
}

}  // namespace

namespace {

// sparse row reduction over the coefficient field on module terms; keeps
// the vectors whose normal forms are linearly independent
struct TermKey {
    Monomial mon;
    int comp;
    bool operator<(const TermKey& o) const {
        if (comp != o.comp) return comp < o.comp;
        return mon.e < o.mon.e;
    }
};

class FieldRows {
public:
    explicit FieldRows(const FieldCtx& K) : K_(K) {}

    // reduces v by the stored rows; true if independent (and then inserted)
    bool insert(const MVec& v) {
        std::map<TermKey, Coeff> row;
        for (const auto& t : v.terms()) row[{t.mon, t.comp}] = t.coef;
        for (const auto& r : rows_) {
            auto it = row.find(r.pivot);
            if (it == row.end() || K_.is_zero(it->second)) continue;
            Coeff f = it->second;  // pivot rows are normalized to 1
            for (const auto& [k, c] : r.entries) {
                auto slot = row.find(k);
                if (slot == row.end())
                    row.emplace(k, K_.neg(K_.mul(f, c)));
                else
                    slot->second = K_.sub(slot->second, K_.mul(f, c));
            }
        }
        TermKey pivot{};
        bool found = false;
        for (const auto& [k, c] : row) {
            if (K_.is_zero(c)) continue;
            if (!found || k < pivot) { pivot = k; found = true; }
        }
        if (!found) return false;
        Coeff inv = K_.inv(row[pivot]);
        Row r;
        r.pivot = pivot;
        for (const auto& [k, c] : row)
            if (!K_.is_zero(c)) r.entries.emplace_back(k, K_.mul(c, inv));
        rows_.push_back(std::move(r));
        return true;
    }

private:
    struct Row {
        TermKey pivot;
        std::vector<std::pair<TermKey, Coeff>> entries;
    };
    const FieldCtx& K_;
    std::vector<Row> rows_;
};

}  // namespace

std::vector<MVec> module_trim(const Ambient& amb, const FreeModule& F, std::vector<MVec> vs,
                              const std::vector<MVec>& extra_rels, const GBConfig& cfg) {
    // drop zero elements (mod the relations), sort ascending by degree
    std::vector<MVec> work;
    auto qrels = ambient_quotient_rels(amb, F.rank());
    ModuleBasis rel_basis = submodule_basis(amb.P, F.rank(), extra_rels, qrels, cfg);
    for (auto& v : vs) {
        MVec r = rel_basis.normal_form(v);
        if (r.is_zero()) continue;
        r = reduce_entries_mod_Q(r, amb, cfg);
        if (r.is_zero()) continue;
        if (!r.homogeneous(amb.P, F.tw))
            throw error("module_trim expects homogeneous elements");
        work.push_back(std::move(r));
    }
    std::sort(work.begin(), work.end(), [&](const MVec& a, const MVec& b) {
        int da = a.degree(amb.P, F.tw), db = b.degree(amb.P, F.tw);
        if (da != db) return da < db;
        std::string sa = a.to_string(amb.P), sb = b.to_string(amb.P);
        return sa < sb;
    });
    // graded Nakayama, one degree at a time: a candidate is a new minimal
    // generator iff its normal form against the span of the kept lower
    // degrees is field-independent of the other same-degree normal forms
    std::vector<MVec> kept;
    std::vector<MVec> span = extra_rels;
    span.insert(span.end(), qrels.begin(), qrels.end());
    std::size_t i = 0;
    while (i < work.size()) {
        int deg = work[i].degree(amb.P, F.tw);
        std::size_t j = i;
        while (j < work.size() && work[j].degree(amb.P, F.tw) == deg) ++j;
        ModuleBasis lower = submodule_basis(amb.P, F.rank(), span, {}, cfg);
        FieldRows rows(amb.P->field());
        for (std::size_t k = i; k < j; ++k) {
            MVec nf = lower.normal_form(work[k]);
            if (nf.is_zero()) continue;
            if (rows.insert(nf)) {
                kept.push_back(work[k]);
                span.push_back(work[k]);
            }
        }
        i = j;
    }
    return kept;
}

bool subquotient_is_zero(const Subquotient& M, const GBConfig& cfg) {
    ModuleBasis mb = submodule_basis(M.amb.P, M.F.rank(), M.rels,
                                     ambient_quotient_rels(M.amb, M.F.rank()), cfg);
    for (const auto& g : M.gens)
        if (!mb.normal_form(g).is_zero()) return false;
    return true;
}

GradedMap syzygy_kernel(const GradedMap& f, const Ambient& amb, const GBConfig& cfg) {
    std::vector<MVec> cols = f.columns_as_mvecs();
    std::vector<MVec> syz = kernel_gens(amb.P, f.dst(), cols,
                                        ambient_quotient_rels(amb, f.dst().rank()), cfg);
    std::vector<int> tw, tw2;
    std::vector<MVec> cleaned;
    for (auto& v : syz) {
        MVec r = reduce_entries_mod_Q(v, amb, cfg);
        if (r.is_zero()) continue;
        cleaned.push_back(r);
        tw.push_back(r.degree(amb.P, f.src().tw));
        if (!f.src().tw2.empty()) tw2.push_back(mvec_degree2(r, amb.P, f.src().tw2));
    }
    return GradedMap::from_mvecs(f.src(), cleaned, tw, tw2);
}

namespace {

// shared resolution step: minimal generators of {u : sum u_i col_i in span(extra)}
GradedMap presentation_step(const Ambient& amb, const FreeModule& F,
                            const std::vector<MVec>& gens, const std::vector<MVec>& extra,
                            bool over_P, const GBConfig& cfg) {
    std::vector<MVec> untagged = extra;
    if (!over_P) {
        auto qr = ambient_quotient_rels(amb, F.rank());
        untagged.insert(untagged.end(), qr.begin(), qr.end());
    }
    std::vector<MVec> syz = kernel_gens(amb.P, F, gens, untagged, cfg);
    // twists of the chosen generators
    std::vector<int> gtw, gtw2;
    for (const auto& g : gens) {
        gtw.push_back(g.degree(amb.P, F.tw));
        if (!F.tw2.empty()) gtw2.push_back(mvec_degree2(g, amb.P, F.tw2));
    }
    FreeModule Fg(amb.P, gtw, gtw2);
    Ambient trim_amb = over_P ? Ambient(amb.P) : amb;
    std::vector<MVec> rels = module_trim(trim_amb, Fg, std::move(syz), {}, cfg);
    std::vector<int> tw, tw2;
    for (const auto& v : rels) {
        tw.push_back(v.degree(amb.P, Fg.tw));
        if (!Fg.tw2.empty()) tw2.push_back(mvec_degree2(v, amb.P, Fg.tw2));
    }
    return GradedMap::from_mvecs(Fg, rels, tw, tw2);
}

bool is_graded_input(const Subquotient& M) {
    for (const auto& g : M.gens)
        if (!g.homogeneous(M.amb.P, M.F.tw)) return false;
    for (const auto& r : M.rels)
        if (!r.homogeneous(M.amb.P, M.F.tw)) return false;
    return true;
}

void check_graded_input(const Subquotient& M) {
    if (!is_graded_input(M)) throw error("graded operation on non-graded module");
}

struct Front {  // trimmed generators of M with their twists
    std::vector<MVec> gens;
    FreeModule Fg;
};

Front trimmed_front(const Subquotient& M, const GBConfig& cfg) {
    check_graded_input(M);
    std::vector<MVec> g = module_trim(M.amb, M.F, M.gens, M.rels, cfg);
    std::vector<int> tw, tw2;
    for (const auto& v : g) {
        tw.push_back(v.degree(M.amb.P, M.F.tw));
        if (!M.F.tw2.empty()) tw2.push_back(mvec_degree2(v, M.amb.P, M.F.tw2));
    }
    return {std::move(g), FreeModule(M.amb.P, std::move(tw), std::move(tw2))};
}

}  // namespace

GradedMap presentation(const Subquotient& M, const GBConfig& cfg) {
    if (!is_graded_input(M)) {
        // ungraded: any presentation will do (Fitting ideals are invariant)
        std::vector<MVec> gens;
        for (const auto& g : M.gens)
            if (!g.is_zero()) gens.push_back(g);
        std::vector<int> gtw(gens.size(), 0);
        FreeModule Fg(M.amb.P, gtw);
        std::vector<MVec> untagged = M.rels;
        auto qr = ambient_quotient_rels(M.amb, M.F.rank());
        untagged.insert(untagged.end(), qr.begin(), qr.end());
        std::vector<MVec> syz = module_syzygies(M.amb.P, M.F.rank(), gens, untagged, cfg);
        std::vector<int> tw(syz.size(), 0);
        return GradedMap::from_mvecs(Fg, syz, tw);
    }
    Front fr = trimmed_front(M, cfg);
    std::vector<MVec> untagged = M.rels;
    auto qr = ambient_quotient_rels(M.amb, M.F.rank());
    untagged.insert(untagged.end(), qr.begin(), qr.end());
    std::vector<MVec> syz = kernel_gens(M.amb.P, M.F, fr.gens, untagged, cfg);
    std::vector<MVec> rels = module_trim(M.amb, fr.Fg, std::move(syz), {}, cfg);
    std::vector<int> tw, tw2;
    for (const auto& v : rels) {
        tw.push_back(v.degree(M.amb.P, fr.Fg.tw));
        if (!fr.Fg.tw2.empty()) tw2.push_back(mvec_degree2(v, M.amb.P, fr.Fg.tw2));
    }
    return GradedMap::from_mvecs(fr.Fg, rels, tw, tw2);
}

GradedMap presentation_over_P(const Subquotient& M, const GBConfig& cfg) {
    Front fr = trimmed_front(M, cfg);
    std::vector<MVec> extra = M.rels;
    auto qr = ambient_quotient_rels(M.amb, M.F.rank());
    extra.insert(extra.end(), qr.begin(), qr.end());
    std::vector<MVec> syz = kernel_gens(M.amb.P, M.F, fr.gens, extra, cfg);
    Ambient PA(M.amb.P);
    std::vector<MVec> rels = module_trim(PA, fr.Fg, std::move(syz), {}, cfg);
    std::vector<int> tw, tw2;
    for (const auto& v : rels) {
        tw.push_back(v.degree(M.amb.P, fr.Fg.tw));
        if (!fr.Fg.tw2.empty()) tw2.push_back(mvec_degree2(v, M.amb.P, fr.Fg.tw2));
    }
    return GradedMap::from_mvecs(fr.Fg, rels, tw, tw2);
}

namespace {

Resolution resolve(const Subquotient& M, bool over_P, int max_len, bool* terminated,
                   const GBConfig& cfg) {
    const Ambient work_amb = over_P ? Ambient(M.amb.P) : M.amb;
    Resolution res;
    res.amb = work_amb;
    GradedMap d1 = over_P ? presentation_over_P(M, cfg) : presentation(M, cfg);
    res.F0 = d1.dst();
    if (terminated) *terminated = true;
    if (d1.ncols() == 0) return res;
    res.diffs.push_back(d1);
    int hard_cap = over_P ? static_cast<int>(M.amb.P->nvars()) : max_len;
    for (int step = 1;; ++step) {
        const GradedMap& last = res.diffs.back();
        GradedMap ker = presentation_step(work_amb, last.dst(), last.columns_as_mvecs(), {},
                                          over_P, cfg);
        // presentation_step treats the previous source as new target
        if (ker.ncols() == 0) return res;
        if (step >= hard_cap) {
            if (over_P)
                throw internal_check_error("resolution exceeded the Hilbert syzygy bound");
            if (terminated) *terminated = false;
            return res;
        }
        res.diffs.push_back(ker);
    }
}

}  // namespace

Resolution minimal_free_resolution(const Subquotient& M, const GBConfig& cfg) {
    GradedMap d1 = presentation_over_P(M, cfg);
    if (d1.dst().rank() == 0) {
        Resolution res;
        res.amb = Ambient(M.amb.P);
        res.F0 = d1.dst();
        return res;
    }
    return schreyer_resolution(d1.dst(), {}, d1.columns_as_mvecs(), cfg);
}

std::optional<Resolution> minimal_free_resolution_bounded(const Subquotient& M, int max_len,
                                                          const GBConfig& cfg) {
    bool terminated = true;
    Resolution r = resolve(M, false, max_len, &terminated, cfg);
    if (!terminated) return std::nullopt;
    return r;
}

BettiTable betti_table(const Resolution& res) {
    BettiTable t;
    auto add = [&](int idx, const FreeModule& F) {
        for (int c = 0; c < F.rank(); ++c) {
            std::vector<int> tw{F.tw[static_cast<std::size_t>(c)]};
            if (!F.tw2.empty()) tw.push_back(F.tw2[static_cast<std::size_t>(c)]);
            ++t.entries[{idx, tw}];
        }
    };
    add(0, res.F0);
    for (int i = 0; i < res.length(); ++i)
        add(i + 1, res.diffs[static_cast<std::size_t>(i)].src());
    return t;
}

namespace {

Polynomial det_rec(const std::vector<std::vector<Polynomial>>& m, std::vector<int> rows,
                   std::vector<int> cols, std::map<std::pair<std::vector<int>, std::vector<int>>,
                                                  Polynomial>& memo,
                   const RingPtr& ring) {
    if (rows.empty()) return Polynomial::one(ring);
    auto key = std::make_pair(rows, cols);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Polynomial acc = Polynomial::zero(ring);
    int r0 = rows[0];
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Polynomial& e = m[static_cast<std::size_t>(r0)][static_cast<std::size_t>(cols[k])];
        if (e.is_zero()) continue;
        std::vector<int> sub_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        Polynomial minor = det_rec(m, sub_rows, sub_cols, memo, ring);
        Polynomial term = e * minor;
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    memo.emplace(key, acc);
    return acc;
}

}  // namespace

Polynomial matrix_determinant(const std::vector<std::vector<Polynomial>>& m) {
    if (m.empty()) throw error("determinant of empty matrix");
    if (m.size() != m[0].size()) throw error("determinant of non-square matrix");
    RingPtr ring = m[0][0].ring();
    std::vector<int> rows, cols;
    for (std::size_t i = 0; i < m.size(); ++i) {
        rows.push_back(static_cast<int>(i));
        cols.push_back(static_cast<int>(i));
    }
    std::map<std::pair<std::vector<int>, std::vector<int>>, Polynomial> memo;
    return det_rec(m, rows, cols, memo, ring);
}

Ideal minors_ideal(const Ambient& amb, const std::vector<std::vector<Polynomial>>& m, int t) {
    if (t < 0) throw error("minor size must be >= 0");
    if (t == 0) return Ideal(amb, {Polynomial::one(amb.P)});
    int nr = static_cast<int>(m.size());
    int nc = nr ? static_cast<int>(m[0].size()) : 0;
    if (t > std::min(nr, nc)) return Ideal(amb, {});
    std::vector<int> rs(static_cast<std::size_t>(t)), cs(static_cast<std::size_t>(t));
    std::vector<Polynomial> gens;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Polynomial> memo;
    // iterate all t-subsets of rows and columns
    std::vector<int> ridx(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) ridx[static_cast<std::size_t>(i)] = i;
    auto next_subset = [](std::vector<int>& s, int n) {
        int k = static_cast<int>(s.size());
        int i = k - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++s[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
        return true;
    };
    do {
        std::vector<int> cidx(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) cidx[static_cast<std::size_t>(i)] = i;
        do {
            Polynomial d = det_rec(m, ridx, cidx, memo, amb.P);
            d = amb.reduce(d);
            if (!d.is_zero()) gens.push_back(d);
        } while (next_subset(cidx, nc));
    } while (next_subset(ridx, nr));
    return Ideal(amb, std::move(gens));
}

Ideal fitting_ideal(const Subquotient& M, int i, const GBConfig& cfg) {
    GradedMap pres = presentation(M, cfg);
    int n = pres.rows();
    if (n - i <= 0) return Ideal(M.amb, {Polynomial::one(M.amb.P)});
    std::vector<std::vector<Polynomial>> mat(
        static_cast<std::size_t>(n),
        std::vector<Polynomial>(static_cast<std::size_t>(pres.ncols()),
                                Polynomial::zero(M.amb.P)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < pres.ncols(); ++c)
            mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = pres.entry(r, c);
    return minors_ideal(M.amb, mat, n - i);
}

HomologyResult complex_homology(const std::vector<GradedMap>& maps, const Ambient& amb,
                                const GBConfig& cfg) {
    if (maps.empty()) throw error("empty complex");
    for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
        if (maps[k].src().rank() != maps[k + 1].dst().rank())
            throw error("complex maps are not composable");
        GradedMap comp = compose(maps[k], maps[k + 1]);
        for (const auto& col : comp.cols())
            for (const auto& p : col)
                if (!amb.is_zero_in_R(p, cfg))
                    throw error("consecutive maps do not compose to zero");
    }
    HomologyResult out;
    int k = static_cast<int>(maps.size());
    for (int i = 0; i <= k; ++i) {
        Subquotient H;
        H.amb = amb;
        if (i == 0) {
            H.F = maps[0].dst();
            for (int c = 0; c < H.F.rank(); ++c) {
                std::vector<MTerm> ts{{Monomial(amb.P->nvars()), c, amb.P->field().one()}};
                H.gens.push_back(MVec::make(amb.P, plain_ord(), std::move(ts)));
            }
            H.rels = maps[0].columns_as_mvecs();
        } else {
            const GradedMap& d = maps[static_cast<std::size_t>(i - 1)];
            H.F = d.src();
            GradedMap ker = syzygy_kernel(d, amb, cfg);
            H.gens = ker.columns_as_mvecs();
            if (i < k) H.rels = maps[static_cast<std::size_t>(i)].columns_as_mvecs();
        }
        out.zero.push_back(subquotient_is_zero(H, cfg));
        out.H.push_back(std::move(H));
    }
    return out;
}

Subquotient ext_module(const Subquotient& M, int i, const GBConfig& cfg) {
    if (i < 0) throw error("negative Ext index");
    Resolution res = minimal_free_resolution(M, cfg);
    Ambient PA(M.amb.P);
    Subquotient E;
    E.amb = PA;
    if (i > res.length()) {  // zero module
        E.F = FreeModule::of_rank(M.amb.P, 0);
        return E;
    }
    FreeModule Fi_dual = res.module_at(i);
    for (auto& t : Fi_dual.tw) t = -t;
    for (auto& t : Fi_dual.tw2) t = -t;
    E.F = Fi_dual;
    if (i == res.length()) {
        for (int c = 0; c < E.F.rank(); ++c) {
            std::vector<MTerm> ts{{Monomial(M.amb.P->nvars()), c, M.amb.P->field().one()}};
            E.gens.push_back(MVec::make(M.amb.P, plain_ord(), std::move(ts)));
        }
    } else {
        GradedMap T = res.diffs[static_cast<std::size_t>(i)].transpose();
        GradedMap ker = syzygy_kernel(T, PA, cfg);
        E.gens = ker.columns_as_mvecs();
    }
    if (i > 0)
        E.rels = res.diffs[static_cast<std::size_t>(i - 1)].transpose().columns_as_mvecs();
    return E;
}

}  // namespace resint
