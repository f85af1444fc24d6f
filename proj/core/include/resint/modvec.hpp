#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "resint/polynomial.hpp"

namespace resint {

// Term of a free-module element: monomial * coeff in basis slot `comp`.
struct MTerm {
    Monomial mon;
    int comp = 0;
    Coeff coef;
};

// Chain of induced (Schreyer) frames: a term m*e_c in the current frame is
// compared through its image m*lead(g_c) in the frame below, ties broken by
// the column index. Syzygies of a basis are born a basis under this order.
struct SchreyerLevel {
    std::vector<Monomial> lead_mon;
    std::vector<int> lead_comp;
    std::shared_ptr<const SchreyerLevel> prev;
    std::uint64_t sig = 0;  // content hash for cache keys
};

// Order on module terms. Components below `n_main` dominate the rest
// (elimination between blocks, used to read syzygies and lifts off a basis);
// inside a block terms are compared term-over-position, or through a
// Schreyer chain when one is attached.
struct ModOrder {
    MonomialOrder mono = MonomialOrder::grevlex();
    int n_main = -1;  // -1: single block
    std::shared_ptr<const SchreyerLevel> schreyer;  // applies to main components

    int block_of(int comp) const { return (n_main >= 0 && comp >= n_main) ? 1 : 0; }

    int cmp_induced(const SchreyerLevel* lvl, const Monomial& m1, int c1, const Monomial& m2,
                    int c2, const PolyRing& ring) const {
        if (!lvl) {
            int c = mono.cmp(m1, m2, ring);
            if (c) return c;
            if (c1 != c2) return c1 < c2 ? 1 : -1;
            return 0;
        }
        Monomial M1 = m1 * lvl->lead_mon[static_cast<std::size_t>(c1)];
        Monomial M2 = m2 * lvl->lead_mon[static_cast<std::size_t>(c2)];
        int c = cmp_induced(lvl->prev.get(), M1, lvl->lead_comp[static_cast<std::size_t>(c1)],
                            M2, lvl->lead_comp[static_cast<std::size_t>(c2)], ring);
        if (c) return c;
        if (c1 != c2) return c1 < c2 ? 1 : -1;
        return 0;
    }

    int cmp(const MTerm& a, const MTerm& b, const PolyRing& ring) const {
        int ba = block_of(a.comp), bb = block_of(b.comp);
        if (ba != bb) return ba < bb ? 1 : -1;
        if (schreyer && ba == 0)
            return cmp_induced(schreyer.get(), a.mon, a.comp, b.mon, b.comp, ring);
        int c = mono.cmp(a.mon, b.mon, ring);
        if (c) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
    }

    std::string signature() const {
        std::string s = mono.signature() + "/main=" + std::to_string(n_main);
        if (schreyer) s += "/schreyer=" + std::to_string(schreyer->sig);
        return s;
    }
};

// Element of a free module, terms strictly descending under a ModOrder.
class MVec {
public:
    MVec() = default;

    static MVec make(const RingPtr& ring, const ModOrder& ord, std::vector<MTerm> ts) {
        std::sort(ts.begin(), ts.end(), [&](const MTerm& a, const MTerm& b) {
            return ord.cmp(a, b, *ring) > 0;
        });
        MVec v;
        const FieldCtx& K = ring->field();
        for (auto& t : ts) {
            if (!v.ts_.empty() && v.ts_.back().mon == t.mon && v.ts_.back().comp == t.comp) {
                v.ts_.back().coef = K.add(v.ts_.back().coef, t.coef);
                if (K.is_zero(v.ts_.back().coef)) v.ts_.pop_back();
            } else if (!K.is_zero(t.coef)) {
                v.ts_.push_back(std::move(t));
            }
        }
        return v;
    }

    static MVec from_poly(const Polynomial& p, int comp, const RingPtr& ring, const ModOrder& ord) {
        std::vector<MTerm> ts;
        ts.reserve(p.terms().size());
        for (const auto& t : p.terms()) ts.push_back({t.mon, comp, t.coef});
        return make(ring, ord, std::move(ts));
    }

    static MVec from_column(const std::vector<Polynomial>& col, const RingPtr& ring,
                            const ModOrder& ord) {
        std::vector<MTerm> ts;
        for (std::size_t c = 0; c < col.size(); ++c)
            for (const auto& t : col[c].terms())
                ts.push_back({t.mon, static_cast<int>(c), t.coef});
        return make(ring, ord, std::move(ts));
    }

    bool is_zero() const { return ts_.empty(); }
    const std::vector<MTerm>& terms() const { return ts_; }
    const MTerm& lead() const {
        if (ts_.empty()) throw error("leading term of zero module element");
        return ts_.front();
    }

    MVec mul_term(const Monomial& m, const Coeff& c, const RingPtr& ring) const {
        MVec r;
        const FieldCtx& K = ring->field();
        if (K.is_zero(c)) return r;
        r.ts_.reserve(ts_.size());
        for (const auto& t : ts_) r.ts_.push_back({t.mon * m, t.comp, K.mul(t.coef, c)});
        return r;
    }

    MVec sub(const MVec& o, const RingPtr& ring, const ModOrder& ord) const {
        MVec r;
        const FieldCtx& K = ring->field();
        r.ts_.reserve(ts_.size() + o.ts_.size());
        std::size_t i = 0, j = 0;
        while (i < ts_.size() && j < o.ts_.size()) {
            int c = ord.cmp(ts_[i], o.ts_[j], *ring);
            if (c > 0) r.ts_.push_back(ts_[i++]);
            else if (c < 0) {
                r.ts_.push_back(o.ts_[j]);
                r.ts_.back().coef = K.neg(r.ts_.back().coef);
                ++j;
            } else {
                Coeff s = K.sub(ts_[i].coef, o.ts_[j].coef);
                if (!K.is_zero(s)) r.ts_.push_back({ts_[i].mon, ts_[i].comp, std::move(s)});
                ++i; ++j;
            }
        }
        while (i < ts_.size()) r.ts_.push_back(ts_[i++]);
        while (j < o.ts_.size()) {
            r.ts_.push_back(o.ts_[j++]);
            r.ts_.back().coef = K.neg(r.ts_.back().coef);
        }
        return r;
    }

    MVec monic(const RingPtr& ring) const {
        if (ts_.empty()) return *this;
        const FieldCtx& K = ring->field();
        Coeff c = K.inv(ts_.front().coef);
        MVec r;
        r.ts_.reserve(ts_.size());
        for (const auto& t : ts_) r.ts_.push_back({t.mon, t.comp, K.mul(t.coef, c)});
        return r;
    }

    // polynomial sitting in one component; zero for the rest
    Polynomial component(int comp, const RingPtr& ring) const {
        std::vector<Term> ts;
        for (const auto& t : ts_)
            if (t.comp == comp) ts.push_back({t.mon, t.coef});
        return Polynomial::from_terms(ring, std::move(ts));
    }

    int max_comp() const {
        int m = -1;
        for (const auto& t : ts_) m = std::max(m, t.comp);
        return m;
    }
    int min_comp() const {
        int m = ts_.empty() ? -1 : ts_[0].comp;
        for (const auto& t : ts_) m = std::min(m, t.comp);
        return m;
    }

    // degree of a module element given per-component twists (first grading)
    int degree(const RingPtr& ring, const std::vector<int>& twists) const {
        int d = -1;
        for (const auto& t : ts_)
            d = std::max(d, ring->degree(t.mon) + twists[static_cast<std::size_t>(t.comp)]);
        return d;
    }
    bool homogeneous(const RingPtr& ring, const std::vector<int>& twists) const {
        if (ts_.empty()) return true;
        int d = ring->degree(ts_[0].mon) + twists[static_cast<std::size_t>(ts_[0].comp)];
        for (const auto& t : ts_)
            if (ring->degree(t.mon) + twists[static_cast<std::size_t>(t.comp)] != d) return false;
        return true;
    }

    bool operator==(const MVec& o) const {
        if (ts_.size() != o.ts_.size()) return false;
        for (std::size_t i = 0; i < ts_.size(); ++i)
            if (ts_[i].mon != o.ts_[i].mon || ts_[i].comp != o.ts_[i].comp ||
                ts_[i].coef != o.ts_[i].coef)
                return false;
        return true;
    }

    std::string to_string(const RingPtr& ring) const;

private:
    std::vector<MTerm> ts_;
};

}  // namespace resint
