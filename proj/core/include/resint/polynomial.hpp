#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resint/order.hpp"
#include "resint/ring.hpp"

namespace resint {

struct Term {
    Monomial mon;
    Coeff coef;
};

// Sparse exact polynomial. Terms are strictly sorted descending under the
// ring's canonical grevlex order; no zero coefficients, no duplicates.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Coeff& c) {
        Polynomial p(ring);
        if (!ring->field().is_zero(c)) p.terms_.push_back({Monomial(ring->nvars()), c});
        return p;
    }
    static Polynomial one(RingPtr ring) {
        Coeff c = ring->field().one();
        return constant(std::move(ring), c);
    }
    static Polynomial variable(RingPtr ring, int idx, int exp = 1) {
        Polynomial p(ring);
        Monomial m(ring->nvars());
        m.e[static_cast<std::size_t>(idx)] = exp;
        p.terms_.push_back({std::move(m), ring->field().one()});
        return p;
    }
    static Polynomial monomial_term(RingPtr ring, Monomial m, Coeff c) {
        Polynomial p(ring);
        if (!ring->field().is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }
    // builds canonical form from arbitrary term soup
    static Polynomial from_terms(RingPtr ring, std::vector<Term> ts);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one());
    }
    // nonzero constant (a unit, since coefficients form a field)
    bool is_unit_constant() const { return !terms_.empty() && is_constant(); }

    const Term& leading_term(const MonomialOrder& o) const;
    const Term& leading_term() const {  // canonical (grevlex) leading term
        if (terms_.empty()) throw error("leading term of the zero polynomial");
        return terms_.front();
    }

    // (weighted degree, homogeneous?); zero polynomial -> (nullopt, true)
    std::pair<std::optional<int>, bool> degree_info() const {
        if (terms_.empty()) return {std::nullopt, true};
        int mx = ring_->degree(terms_[0].mon), mn = mx;
        for (const auto& t : terms_) {
            int d = ring_->degree(t.mon);
            mx = std::max(mx, d);
            mn = std::min(mn, d);
        }
        return {mx, mx == mn};
    }
    int degree() const {  // -1 for the zero polynomial
        auto [d, h] = degree_info();
        return d ? *d : -1;
    }
    bool is_homogeneous() const { return degree_info().second; }
    // homogeneity in the second grading too (bigraded rings)
    bool is_bihomogeneous() const {
        if (!ring_->bigraded() || terms_.empty()) return is_homogeneous();
        if (!is_homogeneous()) return false;
        int d0 = ring_->degree2(terms_[0].mon);
        for (const auto& t : terms_)
            if (ring_->degree2(t.mon) != d0) return false;
        return true;
    }
    int degree2() const {
        if (terms_.empty()) return -1;
        int mx = ring_->degree2(terms_[0].mon);
        for (const auto& t : terms_) mx = std::max(mx, ring_->degree2(t.mon));
        return mx;
    }

    Polynomial operator+(const Polynomial& q) const;
    Polynomial operator-(const Polynomial& q) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& q) const;
    Polynomial scale(const Coeff& c) const;
    Polynomial mul_term(const Monomial& m, const Coeff& c) const;
    Polynomial monic() const;

    bool operator==(const Polynomial& q) const {
        if (terms_.size() != q.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mon != q.terms_[i].mon || terms_[i].coef != q.terms_[i].coef)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& q) const { return !(*this == q); }

    // exact division by a nonzero polynomial; throws if not divisible
    Polynomial exact_divide(const Polynomial& d) const;

    // image under a variable map into another ring (var i -> image index map[i])
    Polynomial map_vars(const RingPtr& target, const std::vector<int>& var_map) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

// canonical (grevlex) compare used wherever polynomials need a stable sort
int poly_cmp(const Polynomial& a, const Polynomial& b);

}  // namespace resint
