#include "resint/koszul.hpp"

#include <sstream>

namespace resint {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
    for (;;) {
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++s[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

namespace {

// sign of merging two disjoint sorted subsets: parity of inversions
int merge_sign(const std::vector<int>& a, const std::vector<int>& b) {
    int inv = 0;
    for (int x : a)
        for (int y : b)
            if (x > y) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return true;
}

std::vector<int> merge_sets(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> m;
    m.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
    return m;
}

int subset_index(const std::vector<std::vector<int>>& all, const std::vector<int>& s) {
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == s) return static_cast<int>(i);
    throw error("subset not found in basis enumeration");
}

}  // namespace

WedgeElement wedge_product(const WedgeElement& a, const WedgeElement& b) {
    if (a.r != b.r) throw error("wedge of elements over different exterior ranks");
    WedgeElement out;
    out.r = a.r;
    out.k = a.k + b.k;
    for (const auto& [sa, pa] : a.comps) {
        if (pa.is_zero()) continue;
        for (const auto& [sb, pb] : b.comps) {
            if (pb.is_zero()) continue;
            if (!disjoint(sa, sb)) continue;
            int sg = merge_sign(sa, sb);
            Polynomial term = pa * pb;
            if (sg < 0) term = -term;
            std::vector<int> key = merge_sets(sa, sb);
            auto it = out.comps.find(key);
            if (it == out.comps.end()) out.comps.emplace(std::move(key), std::move(term));
            else it->second = it->second + term;
        }
    }
    for (auto it = out.comps.begin(); it != out.comps.end();) {
        if (it->second.is_zero()) it = out.comps.erase(it);
        else ++it;
    }
    return out;
}

Polynomial wedge_coefficient(const std::vector<WedgeElement>& elts, const RingPtr& ring) {
    if (elts.empty()) throw error("empty wedge product");
    int r = elts[0].r;
    int total = 0;
    for (const auto& e : elts) total += e.k;
    if (total != r) throw error("total exterior degree must equal the rank");
    WedgeElement acc = WedgeElement::unit(ring, r);
    for (const auto& e : elts) acc = wedge_product(acc, e);
    std::vector<int> full(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) full[static_cast<std::size_t>(i)] = i;
    auto it = acc.comps.find(full);
    return it == acc.comps.end() ? Polynomial::zero(ring) : it->second;
}

KoszulData koszul_complex(const Ambient& amb, const std::vector<Polynomial>& f,
                          const GBConfig& cfg) {
    if (f.empty()) throw error("Koszul complex of an empty sequence");
    KoszulData kd;
    kd.amb = amb;
    kd.f = f;
    kd.r = static_cast<int>(f.size());
    const RingPtr& P = amb.P;
    std::vector<int> degs;
    for (const auto& g : f) {
        if (g.is_zero()) throw error("Koszul complex over a zero generator");
        degs.push_back(g.degree());
    }
    // free terms K_i with subset-degree twists
    for (int i = 0; i <= kd.r; ++i) {
        auto subs = subsets_of_size(kd.r, i);
        std::vector<int> tw;
        tw.reserve(subs.size());
        for (const auto& D : subs) {
            int t = 0;
            for (int x : D) t += degs[static_cast<std::size_t>(x)];
            tw.push_back(t);
        }
        kd.K.emplace_back(P, std::move(tw));
    }
    // differentials delta_i : K_i -> K_{i-1}
    for (int i = 1; i <= kd.r; ++i) {
        auto src_subs = subsets_of_size(kd.r, i);
        auto dst_subs = subsets_of_size(kd.r, i - 1);
        std::vector<std::vector<Polynomial>> cols;
        for (const auto& D : src_subs) {
            std::vector<Polynomial> col(dst_subs.size(), Polynomial::zero(P));
            for (std::size_t m = 0; m < D.size(); ++m) {
                std::vector<int> rest;
                for (std::size_t t = 0; t < D.size(); ++t)
                    if (t != m) rest.push_back(D[t]);
                Polynomial e = f[static_cast<std::size_t>(D[m])];
                if (m % 2 == 1) e = -e;
                int row = subset_index(dst_subs, rest);
                col[static_cast<std::size_t>(row)] =
                    col[static_cast<std::size_t>(row)] + e;
            }
            cols.push_back(std::move(col));
        }
        kd.delta.emplace_back(kd.K[static_cast<std::size_t>(i)],
                              kd.K[static_cast<std::size_t>(i - 1)], std::move(cols));
    }
    // cycles and boundaries
    kd.Z.resize(static_cast<std::size_t>(kd.r) + 1);
    kd.B.resize(static_cast<std::size_t>(kd.r) + 1);
    ModOrder plain;
    kd.Z[0] = {MVec::from_poly(Polynomial::one(P), 0, P, plain)};
    for (int i = 1; i <= kd.r; ++i) {
        GradedMap ker = syzygy_kernel(kd.delta[static_cast<std::size_t>(i - 1)], amb, cfg);
        kd.Z[static_cast<std::size_t>(i)] = ker.columns_as_mvecs();
    }
    for (int i = 0; i < kd.r; ++i)
        kd.B[static_cast<std::size_t>(i)] =
            kd.delta[static_cast<std::size_t>(i)].columns_as_mvecs();
    // homology vanishing and grade
    kd.H_zero.assign(static_cast<std::size_t>(kd.r) + 1, true);
    int top = -1;
    for (int i = 0; i <= kd.r; ++i) {
        Subquotient H = kd.homology(i);
        bool z = subquotient_is_zero(H, cfg);
        kd.H_zero[static_cast<std::size_t>(i)] = z;
        if (!z) top = std::max(top, i);
    }
    kd.grade = (top < 0) ? kHeightInfinity : kd.r - top;
    return kd;
}

Subquotient KoszulData::homology(int i) const {
    if (i < 0 || i > r) throw error("Koszul homology index out of range");
    Subquotient H;
    H.amb = amb;
    H.F = K[static_cast<std::size_t>(i)];
    H.gens = Z[static_cast<std::size_t>(i)];
    H.rels = B[static_cast<std::size_t>(i)];
    return H;
}

WedgeElement KoszulData::cycle_as_wedge(int i, int gen_index) const {
    const MVec& v = Z[static_cast<std::size_t>(i)][static_cast<std::size_t>(gen_index)];
    auto subs = subsets_of_size(r, i);
    WedgeElement w;
    w.r = r;
    w.k = i;
    for (std::size_t c = 0; c < subs.size(); ++c) {
        Polynomial p = v.component(static_cast<int>(c), amb.P);
        if (!p.is_zero()) w.comps[subs[c]] = p;
    }
    return w;
}

ProperSeqResult proper_sequence_check(const Ambient& amb, const std::vector<Polynomial>& f,
                                      const GBConfig& cfg) {
    ProperSeqResult res;
    int r = static_cast<int>(f.size());
    for (int i = 1; i < r; ++i) {
        std::vector<Polynomial> prefix(f.begin(), f.begin() + i);
        KoszulData kd = koszul_complex(amb, prefix, cfg);
        for (int j = 1; j <= i; ++j) {
            if (kd.H_zero[static_cast<std::size_t>(j)]) continue;
            // every homology generator must be annihilated into the boundaries
            ModuleBasis bnd = submodule_basis(
                amb.P, kd.K[static_cast<std::size_t>(j)].rank(),
                kd.B[static_cast<std::size_t>(j)],
                ambient_quotient_rels(amb, kd.K[static_cast<std::size_t>(j)].rank()), cfg);
            for (std::size_t g = 0; g < kd.Z[static_cast<std::size_t>(j)].size(); ++g) {
                MVec prod = kd.Z[static_cast<std::size_t>(j)][g].mul_term(
                    Monomial(amb.P->nvars()), amb.P->field().one(), amb.P);
                // multiply the cycle by f_{i+1}
                MVec scaled;
                {
                    std::vector<MTerm> ts;
                    for (const auto& t : prod.terms())
                        for (const auto& ft : f[static_cast<std::size_t>(i)].terms())
                            ts.push_back({t.mon * ft.mon, t.comp,
                                          amb.P->field().mul(t.coef, ft.coef)});
                    scaled = MVec::make(amb.P, ModOrder{}, std::move(ts));
                }
                if (!bnd.normal_form(scaled).is_zero()) {
                    res.proper = false;
                    std::ostringstream w;
                    w << "f_" << (i + 1) << " * (generator " << g << " of H_" << j << "(f_1..f_"
                      << i << ")) is not a boundary";
                    res.witness = w.str();
                    return res;
                }
            }
        }
    }
    return res;
}

SlidingDepthResult sliding_depth_check(const Ambient& amb, const std::vector<Polynomial>& f,
                                       int k, SlidingVariant variant, const GBConfig& cfg) {
    SlidingDepthResult out;
    KoszulData kd = koszul_complex(amb, f, cfg);
    int d = dim_of_ring(amb, cfg);
    int r = kd.r;
    int g = kd.grade;
    if (g == kHeightInfinity) return out;  // unit ideal: nothing to check
    for (int i = 0; i <= r - g; ++i) {
        Subquotient M;
        M.amb = amb;
        M.F = kd.K[static_cast<std::size_t>(i)];
        if (variant == SlidingVariant::SD) {
            M.gens = kd.Z[static_cast<std::size_t>(i)];
            M.rels = kd.B[static_cast<std::size_t>(i)];
        } else {
            M.gens = kd.Z[static_cast<std::size_t>(i)];
        }
        if (subquotient_is_zero(M, cfg)) {
            out.detail.push_back((variant == SlidingVariant::SD ? "H_" : "Z_") +
                                 std::to_string(i) + " = 0");
            continue;
        }
        DepthInfo di = depth_pd_reg(M, cfg);
        int bound = d - r + i + k;
        std::ostringstream line;
        line << (variant == SlidingVariant::SD ? "depth(H_" : "depth(Z_") << i << ") = "
             << di.depth << " (needs >= " << bound << ")";
        out.detail.push_back(line.str());
        if (di.depth < bound) out.holds = false;
    }
    return out;
}

}  // namespace resint
