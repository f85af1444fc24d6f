// internal: geobucket accumulator shared by the reduction loops
#pragma once

#include "resint/modvec.hpp"

namespace resint {

inline std::vector<MTerm> merge_terms(const std::vector<MTerm>& a, const std::vector<MTerm>& b,
                                      const RingPtr& ring, const ModOrder& ord) {
    const FieldCtx& K = ring->field();
    std::vector<MTerm> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = ord.cmp(a[i], b[j], *ring);
        if (c > 0) r.push_back(a[i++]);
        else if (c < 0) r.push_back(b[j++]);
        else {
            Coeff s = K.add(a[i].coef, b[j].coef);
            if (!K.is_zero(s)) r.push_back({a[i].mon, a[i].comp, std::move(s)});
            ++i; ++j;
        }
    }
    while (i < a.size()) r.push_back(a[i++]);
    while (j < b.size()) r.push_back(b[j++]);
    return r;
}

// cheap repeated additions during long reductions
class Geobucket {
public:
    Geobucket(const RingPtr& ring, const ModOrder& ord) : ring_(ring), ord_(ord) {}

    void add(std::vector<MTerm> v) {
        if (v.empty()) return;
        std::size_t i = 0;
        while (cap(i) < v.size()) ++i;
        if (buckets_.size() <= i) buckets_.resize(i + 1);
        for (;;) {
            if (buckets_[i].size() == 0) {
                buckets_[i].t = std::move(v);
                buckets_[i].head = 0;
                return;
            }
            v = merge_terms(buckets_[i].view(), v, ring_, ord_);
            buckets_[i].clear();
            if (v.empty()) return;
            if (v.size() <= cap(i)) {
                buckets_[i].t = std::move(v);
                buckets_[i].head = 0;
                return;
            }
            ++i;
            if (buckets_.size() <= i) buckets_.resize(i + 1);
        }
    }

    // removes and returns the leading term; false when the value is zero
    bool pop_lead(MTerm& out) {
        const FieldCtx& K = ring_->field();
        for (;;) {
            int best = -1;
            for (std::size_t b = 0; b < buckets_.size(); ++b) {
                if (buckets_[b].size() == 0) continue;
                if (best < 0 ||
                    ord_.cmp(buckets_[b].front(),
                             buckets_[static_cast<std::size_t>(best)].front(), *ring_) > 0)
                    best = static_cast<int>(b);
            }
            if (best < 0) return false;
            MTerm lead = buckets_[static_cast<std::size_t>(best)].front();
            Coeff sum = K.zero();
            for (auto& bucket : buckets_) {
                if (bucket.size() == 0) continue;
                if (ord_.cmp(bucket.front(), lead, *ring_) == 0) {
                    sum = K.add(sum, bucket.front().coef);
                    ++bucket.head;
                }
            }
            if (K.is_zero(sum)) continue;
            out = {lead.mon, lead.comp, std::move(sum)};
            return true;
        }
    }

    std::vector<MTerm> drain() {
        std::vector<MTerm> acc;
        for (auto& b : buckets_) {
            if (b.size() == 0) continue;
            acc = merge_terms(acc, b.view(), ring_, ord_);
            b.clear();
        }
        return acc;
    }

private:
    struct Bucket {
        std::vector<MTerm> t;
        std::size_t head = 0;
        std::size_t size() const { return t.size() - head; }
        const MTerm& front() const { return t[head]; }
        std::vector<MTerm> view() const {
            return std::vector<MTerm>(t.begin() + static_cast<std::ptrdiff_t>(head), t.end());
        }
        void clear() {
            t.clear();
            head = 0;
        }
    };
    static std::size_t cap(std::size_t i) {
        std::size_t c = 4;
        for (std::size_t k = 0; k < i; ++k) c *= 4;
        return c;
    }
    const RingPtr& ring_;
    const ModOrder& ord_;
    std::vector<Bucket> buckets_;
};

}  // namespace resint
