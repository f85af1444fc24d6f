#pragma once

#include "resint/kitt.hpp"

namespace resint {

// Ranks and twists of a length-s complex of free R-modules with F_0 = R.
struct GradedComplexLayout {
    std::string kind;                      // "F" or "Q"
    std::vector<std::vector<int>> twists;  // index 0..s; twists[0] = {0}

    int length() const { return static_cast<int>(twists.size()) - 1; }
    int rank(int i) const { return static_cast<int>(twists[static_cast<std::size_t>(i)].size()); }
};

// Terms of the residual approximation complex built from the Koszul tail:
// each piece is an inverse-monomial extraction of the t-local cohomology of
// the gamma-Koszul double complex.
GradedComplexLayout f_complex_layout(int r, int s, const std::vector<int>& d,
                                     const std::vector<int>& l);

// Q-layout: same extraction, Betti pieces of Sym(I) replacing the Koszul tail.
// Preconditions of the sliding-depth theorem are enforced: the generators
// form a proper sequence, pd_S(Sym I) <= r-1, t-regularity 0.
GradedComplexLayout q_complex_layout(const ResidualInput& in, const GBConfig& cfg = {});

struct HilbertIdentity {
    bool holds = true;
    int first_failure = -1;
};
// HF_M(n) = sum_i (-1)^i sum_{a in twists_i} HF_R(n - a) for n = 0..n_max
HilbertIdentity hilbert_identity_check(const GradedComplexLayout& layout,
                                       const HilbertSeries& hs_R, const HilbertSeries& hs_M,
                                       int n_max);

struct EricciResult {
    long long value = 0;
    long long euler_route = 0;    // from the F-layout Euler characteristic
    long long generic_route = 0;  // from a seeded generic complete intersection
    std::uint64_t seed_used = 0;
};
// multiplicity of an s-residual of a complete intersection with degree data
// (d, l); the two routes must agree (bounded reseeding, then an error)
EricciResult ericci(const Ambient& amb, const std::vector<int>& d, const std::vector<int>& l,
                    std::uint64_t seed = 1, const GBConfig& cfg = {});

}  // namespace resint
