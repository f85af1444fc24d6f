#include "resint/polynomial.hpp"

#include <sstream>

namespace resint {

namespace {
const MonomialOrder& canonical_order() {
    static const MonomialOrder o = MonomialOrder::grevlex();
    return o;
}
}  // namespace

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> ts) {
    const auto& o = canonical_order();
    const PolyRing& R = *ring;
    std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
        return o.cmp(a.mon, b.mon, R) > 0;
    });
    Polynomial p(ring);
    const FieldCtx& K = ring->field();
    for (auto& t : ts) {
        if (t.mon.nvars() != ring->nvars()) throw error("monomial length does not match ring");
        if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
            p.terms_.back().coef = K.add(p.terms_.back().coef, t.coef);
            if (K.is_zero(p.terms_.back().coef)) p.terms_.pop_back();
        } else if (!K.is_zero(t.coef)) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& Polynomial::leading_term(const MonomialOrder& o) const {
    if (terms_.empty()) throw error("leading term of the zero polynomial");
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
        if (o.cmp(t.mon, best->mon, *ring_) > 0) best = &t;
    return *best;
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
    check_same_ring(ring_, q.ring_);
    const auto& o = canonical_order();
    const FieldCtx& K = ring_->field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < q.terms_.size()) {
        int c = o.cmp(terms_[i].mon, q.terms_[j].mon, *ring_);
        if (c > 0) r.terms_.push_back(terms_[i++]);
        else if (c < 0) r.terms_.push_back(q.terms_[j++]);
        else {
            Coeff s = K.add(terms_[i].coef, q.terms_[j].coef);
            if (!K.is_zero(s)) r.terms_.push_back({terms_[i].mon, std::move(s)});
            ++i; ++j;
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < q.terms_.size()) r.terms_.push_back(q.terms_[j++]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    const FieldCtx& K = ring_->field();
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mon, K.neg(t.coef)});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const { return *this + (-q); }

Polynomial Polynomial::scale(const Coeff& c) const {
    const FieldCtx& K = ring_->field();
    if (K.is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mon, K.mul(t.coef, c)});
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Coeff& c) const {
    const FieldCtx& K = ring_->field();
    if (K.is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mon * m, K.mul(t.coef, c)});
    return r;  // multiplication by a monomial preserves the sort
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
    check_same_ring(ring_, q.ring_);
    Polynomial acc(ring_);
    // accumulate q-shifted copies; fine at the scales this kernel targets
    for (const auto& t : q.terms_) acc = acc + mul_term(t.mon, t.coef);
    return acc;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scale(ring_->field().inv(terms_.front().coef));
}

Polynomial Polynomial::exact_divide(const Polynomial& d) const {
    check_same_ring(ring_, d.ring_);
    if (d.is_zero()) throw error("division by zero polynomial");
    const auto& o = canonical_order();
    const FieldCtx& K = ring_->field();
    Polynomial rem = *this, quot(ring_);
    const Term& lt = d.terms_.front();
    while (!rem.is_zero()) {
        const Term& rt = rem.terms_.front();
        if (!lt.mon.divides(rt.mon)) throw error("polynomial division is not exact");
        Monomial m = rt.mon / lt.mon;
        Coeff c = K.div(rt.coef, lt.coef);
        quot.terms_.push_back({m, c});
        rem = rem - d.mul_term(m, c);
    }
    // quotient terms were produced in strictly descending order already
    (void)o;
    return quot;
}

Polynomial Polynomial::map_vars(const RingPtr& target, const std::vector<int>& var_map) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    const FieldCtx& Kt = target->field();
    const FieldCtx& Ks = ring_->field();
    for (const auto& t : terms_) {
        Monomial m(target->nvars());
        for (std::size_t i = 0; i < t.mon.e.size(); ++i) {
            if (t.mon.e[i] == 0) continue;
            int j = var_map[i];
            if (j < 0) throw error("variable has no image under ring map");
            m.e[static_cast<std::size_t>(j)] += t.mon.e[i];
        }
        Coeff c = t.coef;
        if (Kt.characteristic() != Ks.characteristic()) {
            if (Ks.is_rational()) c = Kt.from_mpq(t.coef.rat());
            else if (Kt.is_rational()) c = Kt.from_int(t.coef.res());
            else c = Kt.from_int(t.coef.res());
        }
        ts.push_back({std::move(m), std::move(c)});
    }
    return from_terms(target, std::move(ts));
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    const FieldCtx& K = ring_->field();
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        Coeff c = t.coef;
        bool neg = K.is_negative(c);
        if (first) {
            if (neg) { out << "-"; c = K.neg(c); }
        } else {
            out << (neg ? " - " : " + ");
            if (neg) c = K.neg(c);
        }
        first = false;
        bool unit_coeff = K.is_one(c);
        bool printed = false;
        if (!unit_coeff || t.mon.is_one()) {
            out << K.to_string(c);
            printed = true;
        }
        for (std::size_t i = 0; i < t.mon.e.size(); ++i) {
            if (t.mon.e[i] == 0) continue;
            if (printed) out << "*";
            out << ring_->vars()[i];
            if (t.mon.e[i] > 1) out << "^" << t.mon.e[i];
            printed = true;
        }
    }
    return out.str();
}

int poly_cmp(const Polynomial& a, const Polynomial& b) {
    static const MonomialOrder o = MonomialOrder::grevlex();
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
        int c = o.cmp(ta[i].mon, tb[i].mon, *a.ring());
        if (c) return c;
    }
    if (ta.size() != tb.size()) return ta.size() > tb.size() ? 1 : -1;
    // same monomial support: compare coefficient strings for a stable total order
    for (std::size_t i = 0; i < ta.size(); ++i) {
        std::string sa = a.ring()->field().to_string(ta[i].coef);
        std::string sb = b.ring()->field().to_string(tb[i].coef);
        if (sa != sb) return sa > sb ? 1 : -1;
    }
    return 0;
}

}  // namespace resint
