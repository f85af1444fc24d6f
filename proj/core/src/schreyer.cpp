// Free resolutions through Schreyer frames: each level's syzygies are
// computed by reducing S-pairs of the previous level's basis and are a
// Groebner basis under the induced order by construction, so no completion
// runs above the first level. The (non-minimal) result is minimized by
// unit pruning at the end.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>

#include "resint/module.hpp"
#include "internal_geobucket.hpp"

namespace resint {

namespace {

struct Frame {
    std::vector<MVec> gb;   // basis elements, coordinates in the frame below
    ModOrder ord;           // order of the frame below (used for reductions)
    FreeModule F;           // frame below
    std::vector<int> tw;    // degrees of the gb elements (twists of this frame)
    std::vector<int> tw2;   // second-grading twists when the ring is bigraded
};

int frame_degree2(const MVec& v, const RingPtr& ring, const std::vector<int>& tw2) {
    int d = 0;
    bool any = false;
    for (const auto& t : v.terms()) {
        int x = ring->degree2(t.mon) + tw2[static_cast<std::size_t>(t.comp)];
        if (!any || x > d) d = x;
        any = true;
    }
    return d;
}

std::uint64_t mix_hash(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::shared_ptr<const SchreyerLevel> induced_level(const Frame& fr) {
    auto lvl = std::make_shared<SchreyerLevel>();
    std::uint64_t h = fr.ord.schreyer ? fr.ord.schreyer->sig : 0;
    for (const auto& g : fr.gb) {
        const MTerm& lt = g.lead();
        lvl->lead_mon.push_back(lt.mon);
        lvl->lead_comp.push_back(lt.comp);
        h = mix_hash(h, static_cast<std::uint64_t>(lt.comp) + 1);
        for (int e : lt.mon.e) h = mix_hash(h, static_cast<std::uint64_t>(e) + 7);
    }
    lvl->prev = fr.ord.schreyer;
    lvl->sig = h;
    return lvl;
}

// top-reduce v to zero against the frame basis, recording the quotients as
// terms of the syzygy (components index the basis elements)
MVec reduce_recording(const RingPtr& ring, const Frame& fr,
                      const std::vector<std::vector<int>>& by_comp, MVec v,
                      std::vector<MTerm>& record, const GBConfig& cfg) {
    const FieldCtx& K = ring->field();
    Geobucket acc(ring, fr.ord);
    acc.add(std::vector<MTerm>(v.terms()));
    MTerm lt;
    while (acc.pop_lead(lt)) {
        if (ring->degree(lt.mon) > cfg.max_degree)
            throw resource_limit_error("degree limit exceeded in Schreyer reduction");
        int found = -1;
        for (int i : by_comp[static_cast<std::size_t>(lt.comp)]) {
            if (fr.gb[static_cast<std::size_t>(i)].lead().mon.divides(lt.mon)) {
                found = i;
                break;
            }
        }
        if (found < 0) {  // nonzero normal form: input was not a basis
            std::vector<MTerm> rest = acc.drain();
            rest.insert(rest.begin(), lt);
            return MVec::make(ring, fr.ord, std::move(rest));
        }
        const MVec& g = fr.gb[static_cast<std::size_t>(found)];
        Monomial m = lt.mon / g.lead().mon;
        Coeff c = K.div(lt.coef, g.lead().coef);
        record.push_back({m, found, c});
        Coeff neg = K.neg(c);
        std::vector<MTerm> sub;
        const auto& gt = g.terms();
        sub.reserve(gt.size());
        for (std::size_t t = 1; t < gt.size(); ++t)
            sub.push_back({gt[t].mon * m, gt[t].comp, K.mul(gt[t].coef, neg)});
        acc.add(std::move(sub));
    }
    return MVec();
}

// one Schreyer step: S-pair syzygies of the frame basis. With i < j the
// tie-break puts the lead of s_ij on m_ij e_i, so per fixed i only the
// pairs whose m_ij is a minimal monomial need reducing: the kept leads
// already generate the lead module of the kernel.
Frame syzygy_level(const RingPtr& ring, const Frame& fr, const GBConfig& cfg) {
    const FieldCtx& K = ring->field();
    int n = static_cast<int>(fr.gb.size());
    std::vector<std::vector<int>> by_comp(
        static_cast<std::size_t>(fr.F.rank() > 0 ? fr.F.rank() : 1));
    for (int i = 0; i < n; ++i)
        by_comp[static_cast<std::size_t>(fr.gb[static_cast<std::size_t>(i)].lead().comp)]
            .push_back(i);
    Frame next;
    next.ord.mono = fr.ord.mono;
    next.ord.schreyer = induced_level(fr);
    next.F = FreeModule(ring, fr.tw, fr.tw2);
    for (int i = 0; i < n; ++i) {
        const MVec& gi = fr.gb[static_cast<std::size_t>(i)];
        const MTerm& li = gi.lead();
        // quotient monomials m_ij for all partners j > i in the same slot
        std::vector<std::pair<Monomial, int>> quotients;
        for (int j = i + 1; j < n; ++j) {
            const MTerm& lj = fr.gb[static_cast<std::size_t>(j)].lead();
            if (lj.comp != li.comp) continue;
            Monomial L = Monomial::lcm(li.mon, lj.mon);
            quotients.push_back({L / li.mon, j});
        }
        // keep only the minimal ones (first partner wins among equals)
        std::vector<std::pair<Monomial, int>> kept;
        for (const auto& [m, j] : quotients) {
            bool dominated = false;
            for (const auto& [m2, j2] : quotients) {
                if (j2 == j) continue;
                if (m2.divides(m) && (m2 != m || j2 < j)) { dominated = true; break; }
            }
            if (!dominated) kept.push_back({m, j});
        }
        for (const auto& [mi, j] : kept) {
            const MVec& gj = fr.gb[static_cast<std::size_t>(j)];
            Monomial L = mi * li.mon;
            Monomial mj = L / gj.lead().mon;
            Coeff ci = K.inv(li.coef);
            Coeff cj = K.inv(gj.lead().coef);
            MVec spair =
                gi.mul_term(mi, ci, ring).sub(gj.mul_term(mj, cj, ring), ring, fr.ord);
            std::vector<MTerm> record;
            MVec rem = reduce_recording(ring, fr, by_comp, std::move(spair), record, cfg);
            if (!rem.is_zero())
                throw internal_check_error("Schreyer level input was not a Groebner basis");
            // syzygy: (1/lc_i) m_i e_i - (1/lc_j) m_j e_j - sum q_t e_t
            std::vector<MTerm> st;
            st.push_back({mi, i, ci});
            st.push_back({mj, j, K.neg(cj)});
            for (auto& q : record) st.push_back({q.mon, q.comp, K.neg(q.coef)});
            MVec s = MVec::make(ring, next.ord, std::move(st));
            if (s.is_zero()) continue;
            next.gb.push_back(std::move(s));
        }
    }
    // deterministic order and twists
    std::sort(next.gb.begin(), next.gb.end(), [&](const MVec& a, const MVec& b) {
        return next.ord.cmp(a.lead(), b.lead(), *ring) < 0;
    });
    for (const auto& s : next.gb) {
        next.tw.push_back(s.degree(ring, fr.tw));
        if (!fr.tw2.empty()) next.tw2.push_back(frame_degree2(s, ring, fr.tw2));
    }
    return next;
}

// unit pruning: removes the unit entries of the differentials by row and
// column operations, propagating the inverse operations to the neighbors
void prune_units(std::vector<GradedMap>& diffs, FreeModule& F0, const RingPtr& ring) {
    const FieldCtx& K = ring->field();
    // mutable copies of the matrix data
    struct Mat {
        std::vector<std::vector<Polynomial>> col;  // col[j][i]
        std::vector<int> src_tw, dst_tw, src_tw2, dst_tw2;
    };
    std::vector<Mat> m(diffs.size());
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        m[k].col = diffs[k].cols();
        m[k].src_tw = diffs[k].src().tw;
        m[k].dst_tw = diffs[k].dst().tw;
        m[k].src_tw2 = diffs[k].src().tw2;
        m[k].dst_tw2 = diffs[k].dst().tw2;
    }
    auto entry = [&](std::size_t k, int r, int c) -> Polynomial& {
        return m[k].col[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    };
    // a unit entry with few row/column neighbors keeps the fill-in low
    auto find_unit = [&](std::size_t k, int& out_r, int& out_c) {
        long long best = -1;
        for (std::size_t c = 0; c < m[k].col.size(); ++c)
            for (std::size_t r = 0; r < m[k].col[c].size(); ++r) {
                if (!m[k].col[c][r].is_unit_constant()) continue;
                long long nnz = 0;
                for (std::size_t cc = 0; cc < m[k].col.size(); ++cc)
                    if (!m[k].col[cc][r].is_zero()) ++nnz;
                for (std::size_t rr = 0; rr < m[k].col[c].size(); ++rr)
                    if (!m[k].col[c][rr].is_zero()) ++nnz;
                if (best < 0 || nnz < best) {
                    best = nnz;
                    out_r = static_cast<int>(r);
                    out_c = static_cast<int>(c);
                }
            }
        return best >= 0;
    };
    std::vector<char> dirty(m.size(), 1);
    for (;;) {
        int fk = -1, fr = -1, fc = -1;
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (!dirty[k]) continue;
            if (find_unit(k, fr, fc)) { fk = static_cast<int>(k); break; }
            dirty[k] = 0;
        }
        if (fk < 0) break;
        std::size_t k = static_cast<std::size_t>(fk);
        if (k > 0) dirty[k - 1] = 1;
        if (k + 1 < m.size()) dirty[k + 1] = 1;
        Polynomial u = entry(k, fr, fc);
        Coeff uinv = K.inv(u.terms()[0].coef);
        int rows = static_cast<int>(m[k].dst_tw.size());
        int cols = static_cast<int>(m[k].src_tw.size());
        // clear row fr with column operations; propagate to d_{k+1} rows
        for (int j = 0; j < cols; ++j) {
            if (j == fc) continue;
            Polynomial a = entry(k, fr, j);
            if (a.is_zero()) continue;
            Polynomial lam = a.scale(uinv);
            for (int i = 0; i < rows; ++i)
                entry(k, i, j) = entry(k, i, j) - lam * entry(k, i, fc);
            if (k + 1 < m.size()) {
                // row_fc += lam * row_j on d_{k+1}
                for (std::size_t cc = 0; cc < m[k + 1].col.size(); ++cc)
                    entry(k + 1, fc, static_cast<int>(cc)) =
                        entry(k + 1, fc, static_cast<int>(cc)) +
                        lam * entry(k + 1, j, static_cast<int>(cc));
            }
        }
        // clear column fc with row operations; propagate to d_{k-1} columns
        for (int i = 0; i < rows; ++i) {
            if (i == fr) continue;
            Polynomial a = entry(k, i, fc);
            if (a.is_zero()) continue;
            Polynomial mu = a.scale(uinv);
            for (int j = 0; j < cols; ++j)
                entry(k, i, j) = entry(k, i, j) - mu * entry(k, fr, j);
            if (k >= 1) {
                // col_fr += mu * col_i on d_{k-1}
                for (std::size_t rr = 0; rr < m[k - 1].dst_tw.size(); ++rr)
                    entry(k - 1, static_cast<int>(rr), fr) =
                        entry(k - 1, static_cast<int>(rr), fr) +
                        mu * entry(k - 1, static_cast<int>(rr), i);
            }
        }
        // delete row fr and column fc of d_k
        for (auto& colv : m[k].col)
            colv.erase(colv.begin() + fr);
        m[k].col.erase(m[k].col.begin() + fc);
        m[k].dst_tw.erase(m[k].dst_tw.begin() + fr);
        m[k].src_tw.erase(m[k].src_tw.begin() + fc);
        if (!m[k].dst_tw2.empty()) m[k].dst_tw2.erase(m[k].dst_tw2.begin() + fr);
        if (!m[k].src_tw2.empty()) m[k].src_tw2.erase(m[k].src_tw2.begin() + fc);
        // delete column fr of d_{k-1} (source basis elt of the level below)
        if (k >= 1) {
            m[k - 1].col.erase(m[k - 1].col.begin() + fr);
            m[k - 1].src_tw.erase(m[k - 1].src_tw.begin() + fr);
            if (!m[k - 1].src_tw2.empty())
                m[k - 1].src_tw2.erase(m[k - 1].src_tw2.begin() + fr);
        }
        // delete row fc of d_{k+1}
        if (k + 1 < m.size()) {
            for (auto& colv : m[k + 1].col)
                colv.erase(colv.begin() + fc);
            m[k + 1].dst_tw.erase(m[k + 1].dst_tw.begin() + fc);
            if (!m[k + 1].dst_tw2.empty())
                m[k + 1].dst_tw2.erase(m[k + 1].dst_tw2.begin() + fc);
        }
    }
    // rebuild GradedMaps, dropping empty tail levels
    std::vector<GradedMap> out;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k].src_tw.empty()) break;
        FreeModule src(ring, m[k].src_tw, m[k].src_tw2);
        FreeModule dst(ring, m[k].dst_tw, m[k].dst_tw2);
        out.emplace_back(src, dst, m[k].col);
    }
    if (!diffs.empty()) {
        F0 = out.empty() ? FreeModule(ring, m[0].dst_tw, m[0].dst_tw2) : out[0].dst();
    }
    diffs = std::move(out);
}

}  // namespace

// minimal graded resolution over the polynomial ring through Schreyer frames
Resolution schreyer_resolution(const FreeModule& F0, const std::vector<MVec>& gens,
                               const std::vector<MVec>& relations, const GBConfig& cfg) {
    const RingPtr& ring = F0.ring;
    Resolution res;
    res.amb = Ambient(ring);
    res.F0 = F0;
    // level 1: Groebner basis of the relation submodule
    std::vector<MVec> relgens = relations;
    (void)gens;
    ModOrder plain;
    ModuleBasis G1 = module_groebner(ring, plain, F0.rank(), relgens, cfg);
    if (G1.elems().empty()) return res;
    Frame fr;
    fr.gb = G1.elems();
    fr.ord = plain;
    fr.F = F0;
    for (const auto& g : fr.gb) {
        fr.tw.push_back(g.degree(ring, F0.tw));
        if (!F0.tw2.empty()) fr.tw2.push_back(frame_degree2(g, ring, F0.tw2));
    }
    std::vector<GradedMap> diffs;
    {
        std::vector<MVec> cols = fr.gb;
        diffs.push_back(GradedMap::from_mvecs(F0, cols, fr.tw, fr.tw2));
    }
    const bool debug = std::getenv("RESINT_DEBUG") != nullptr;
    auto lap = std::chrono::steady_clock::now();
    int guard = static_cast<int>(ring->nvars()) + 2;
    for (int level = 1; level <= guard; ++level) {
        Frame next = syzygy_level(ring, fr, cfg);
        if (debug) {
            auto now = std::chrono::steady_clock::now();
            std::fprintf(stderr, "[schreyer] level %d: %zu elements (%.2fs)\n", level + 1,
                         next.gb.size(), std::chrono::duration<double>(now - lap).count());
            lap = now;
        }
        if (next.gb.empty()) break;
        if (level == guard)
            throw internal_check_error("Schreyer resolution exceeded the variable bound");
        diffs.push_back(
            GradedMap::from_mvecs(FreeModule(ring, fr.tw, fr.tw2), next.gb, next.tw, next.tw2));
        fr = std::move(next);
    }
    FreeModule F0m = F0;
    prune_units(diffs, F0m, ring);
    if (debug)
        std::fprintf(stderr, "[schreyer] prune: %.2fs\n",
                     std::chrono::duration<double>(std::chrono::steady_clock::now() - lap)
                         .count());
    res.F0 = F0m;
    res.diffs = std::move(diffs);
    return res;
}

}  // namespace resint
