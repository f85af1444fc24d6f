#pragma once

#include <memory>
#include <string>
#include <vector>

#include "resint/coeff.hpp"
#include "resint/errors.hpp"

namespace resint {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Exponent vector. Length always matches the ring.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }
    bool is_one() const {
        for (int x : e) if (x) return false;
        return true;
    }
    int total() const {
        int s = 0;
        for (int x : e) s += x;
        return s;
    }
    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }
    // exact quotient; caller guarantees divisibility
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e.size(); ++i)
            if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
        return r;
    }
    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e.size(); ++i)
            if (b.e[i] < r.e[i]) r.e[i] = b.e[i];
        return r;
    }
    bool coprime(const Monomial& b) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] && b.e[i]) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

// Graded polynomial ring over Q or F_p. The first grading drives Hilbert
// series and degrees; a second grading exists solely for the t-variables of
// symmetric-algebra work (bidegrees). Immutable; build via PolyRing::make.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
public:
    static RingPtr make(std::vector<std::string> vars, long long characteristic = 0,
                        std::vector<int> weights = {},
                        std::vector<int> second_weights = {}) {
        auto r = std::shared_ptr<PolyRing>(new PolyRing);
        if (weights.empty()) weights.assign(vars.size(), 1);
        if (weights.size() != vars.size())
            throw error("weight list length does not match variable count");
        for (int w : weights)
            if (w < 1) throw error("variable weights must be >= 1");
        if (!second_weights.empty() && second_weights.size() != vars.size())
            throw error("second grading length does not match variable count");
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j]) throw error("duplicate variable name: " + vars[i]);
        r->vars_ = std::move(vars);
        r->weights_ = std::move(weights);
        r->weights2_ = std::move(second_weights);
        r->field_ = FieldCtx(characteristic);
        return r;
    }

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& weights() const { return weights_; }
    bool bigraded() const { return !weights2_.empty(); }
    const std::vector<int>& second_weights() const { return weights2_; }
    long long characteristic() const { return field_.characteristic(); }
    const FieldCtx& field() const { return field_; }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }

    int degree(const Monomial& m) const {
        int d = 0;
        for (std::size_t i = 0; i < m.e.size(); ++i) d += weights_[i] * m.e[i];
        return d;
    }
    int degree2(const Monomial& m) const {
        int d = 0;
        for (std::size_t i = 0; i < m.e.size(); ++i) d += weights2_[i] * m.e[i];
        return d;
    }
    bool standard_graded() const {
        for (int w : weights_) if (w != 1) return false;
        return true;
    }

    bool same_as(const PolyRing& o) const {
        return vars_ == o.vars_ && weights_ == o.weights_ &&
               weights2_ == o.weights2_ && characteristic() == o.characteristic();
    }

    std::string signature() const {
        std::string s = "ring[";
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (i) s += ",";
            s += vars_[i] + ":" + std::to_string(weights_[i]);
            if (bigraded()) s += ":" + std::to_string(weights2_[i]);
        }
        s += ";p=" + std::to_string(characteristic()) + "]";
        return s;
    }

private:
    PolyRing() = default;
    std::vector<std::string> vars_;
    std::vector<int> weights_;
    std::vector<int> weights2_;
    FieldCtx field_;
};

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_as(*b))
        throw ring_mismatch_error("operands live in different rings");
}

}  // namespace resint
