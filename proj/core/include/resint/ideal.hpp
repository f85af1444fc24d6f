#pragma once

#include <string>
#include <vector>

#include "resint/groebner.hpp"
#include "resint/parser.hpp"

namespace resint {

// Where a computation lives: a polynomial ring P, or R = P/Q when quotient
// generators are present. All engines work in P and lift.
struct Ambient {
    RingPtr P;
    std::vector<Polynomial> quotient;
    // equidimensionality of R: 1 asserted, 0 denied, -1 unknown (verify on demand)
    int equidim = -1;

    Ambient() = default;
    explicit Ambient(RingPtr ring, std::vector<Polynomial> q = {})
        : P(std::move(ring)), quotient(std::move(q)) {}

    bool is_quotient() const { return !quotient.empty(); }
    bool same_as(const Ambient& o) const;
    std::string signature() const;

    // canonical representative modulo Q (identity when R = P)
    Polynomial reduce(const Polynomial& p, const GBConfig& cfg = {}) const;
    bool is_zero_in_R(const Polynomial& p, const GBConfig& cfg = {}) const {
        return reduce(p, cfg).is_zero();
    }
};

class Ideal {
public:
    Ideal() = default;
    Ideal(Ambient amb, std::vector<Polynomial> gens)
        : amb_(std::move(amb)), gens_(std::move(gens)) {
        for (const auto& g : gens_) check_same_ring(g.ring(), amb_.P);
    }

    const Ambient& ambient() const { return amb_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool zero_gens() const {
        for (const auto& g : gens_) if (!g.is_zero()) return false;
        return true;
    }

private:
    Ambient amb_;
    std::vector<Polynomial> gens_;
};

// Reduced basis of the lift I + Q in P; the engine behind ideal arithmetic.
class GroebnerBasis {
public:
    GroebnerBasis() = default;
    GroebnerBasis(Ambient amb, MonomialOrder ord, ModuleBasis mb);

    const Ambient& ambient() const { return amb_; }
    const MonomialOrder& order() const { return ord_; }
    bool quotient_context() const { return amb_.is_quotient(); }
    const std::vector<Polynomial>& elements() const { return elems_; }

    Polynomial reduce(const Polynomial& p) const;
    bool contains_one() const;
    bool verify_self() const { return mb_.verify(); }

private:
    Ambient amb_;
    MonomialOrder ord_ = MonomialOrder::grevlex();
    ModuleBasis mb_;
    std::vector<Polynomial> elems_;
};

GroebnerBasis groebner_basis(const Ideal& I, const MonomialOrder& ord = MonomialOrder::grevlex(),
                             const GBConfig& cfg = {});
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G);

bool ideal_membership(const Polynomial& p, const Ideal& I, const GBConfig& cfg = {});
bool ideal_contains(const Ideal& big, const Ideal& small, const GBConfig& cfg = {});
bool ideal_equal(const Ideal& I, const Ideal& J, const GBConfig& cfg = {});
bool is_unit_ideal(const Ideal& I, const GBConfig& cfg = {});

Ideal ideal_sum(const Ideal& A, const Ideal& B);
Ideal ideal_intersection(const Ideal& A, const Ideal& B, const GBConfig& cfg = {});
Ideal ideal_colon(const Ideal& A, const Ideal& B, const GBConfig& cfg = {});
Ideal ideal_saturation(const Ideal& A, const Ideal& B, const GBConfig& cfg = {});

// polynomial-ambient elimination (quotient inputs are lifted first)
Ideal eliminate(const Ideal& I, const std::vector<int>& var_indices, const GBConfig& cfg = {});

bool radical_membership(const Polynomial& p, const Ideal& I, const GBConfig& cfg = {});
// every generator of B lies in the radical of A
bool radical_contains(const Ideal& A, const Ideal& B, const GBConfig& cfg = {});
bool radical_equal(const Ideal& A, const Ideal& B, const GBConfig& cfg = {});

// minimal homogeneous generators (graded Nakayama greedy); input must be
// homogeneous. Used for mu(-) counts and presentation trimming.
std::vector<Polynomial> trim_generators(const Ambient& amb, std::vector<Polynomial> gens,
                                        const GBConfig& cfg = {});

// ring with extra variables appended (first grading weights given; second
// grading extended with the given values when the base ring is bigraded or
// second weights are supplied for the whole extension)
RingPtr extend_ring(const RingPtr& P, const std::vector<std::string>& names,
                    const std::vector<int>& weights,
                    const std::vector<int>& second_weights_all = {});
Polynomial promote(const Polynomial& p, const RingPtr& ext);
// inverse of promote for polynomials not involving the extra variables
Polynomial restrict_poly(const Polynomial& p, const RingPtr& P);

}  // namespace resint
