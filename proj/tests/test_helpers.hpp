#pragma once

#include <doctest.h>

#include "resint/prng.hpp"
#include "resint/residual.hpp"

namespace rt {

using namespace resint;

inline RingPtr QQ(std::initializer_list<std::string> vars) {
    return PolyRing::make(std::vector<std::string>(vars), 0);
}
inline RingPtr GF(long long p, std::initializer_list<std::string> vars) {
    return PolyRing::make(std::vector<std::string>(vars), p);
}

inline Polynomial P(const RingPtr& R, const std::string& s) { return parse_polynomial(s, R); }

inline std::vector<Polynomial> Ps(const RingPtr& R, std::initializer_list<std::string> ss) {
    std::vector<Polynomial> out;
    for (const auto& s : ss) out.push_back(parse_polynomial(s, R));
    return out;
}

inline Ideal Id(const RingPtr& R, std::initializer_list<std::string> ss) {
    return Ideal(Ambient(R), Ps(R, ss));
}

inline Ideal IdA(const Ambient& amb, std::initializer_list<std::string> ss) {
    return Ideal(amb, Ps(amb.P, ss));
}

// random homogeneous polynomial of the given degree (test generator)
inline Polynomial random_homog(const RingPtr& R, int degree, SplitMix64& g) {
    std::vector<Term> ts;
    const FieldCtx& K = R->field();
    for (const auto& m : monomials_of_degree(R, degree)) {
        long long c = K.is_rational()
                          ? g.range(-3, 3)
                          : static_cast<long long>(g.below(
                                static_cast<std::uint64_t>(R->characteristic())));
        Coeff cf = K.from_int(c);
        if (!K.is_zero(cf)) ts.push_back({m, cf});
    }
    return Polynomial::from_terms(R, std::move(ts));
}

// random not-necessarily-homogeneous polynomial up to the given degree
inline Polynomial random_poly(const RingPtr& R, int max_degree, SplitMix64& g) {
    Polynomial acc = Polynomial::zero(R);
    for (int d = 0; d <= max_degree; ++d)
        if (g.below(2)) acc = acc + random_homog(R, d, g);
    return acc;
}

}  // namespace rt
