#pragma once

#include "resint/invariants.hpp"

namespace resint {

// k-subsets of {0..n-1} in lexicographic order; fixes the basis enumeration
// of every exterior power in the toolkit
std::vector<std::vector<int>> subsets_of_size(int n, int k);

// Homogeneous element of Lambda^k(R^r): sorted subset -> coefficient.
struct WedgeElement {
    int r = 0;
    int k = 0;
    std::map<std::vector<int>, Polynomial> comps;

    static WedgeElement unit(const RingPtr& ring, int r) {
        WedgeElement w;
        w.r = r;
        w.k = 0;
        w.comps[{}] = Polynomial::one(ring);
        return w;
    }
    bool is_zero() const {
        for (const auto& [s, p] : comps)
            if (!p.is_zero()) return false;
        return true;
    }
};

WedgeElement wedge_product(const WedgeElement& a, const WedgeElement& b);
// coefficient of e_0 ^ ... ^ e_{r-1} of the wedge of all elements; total
// exterior degree must equal r
Polynomial wedge_coefficient(const std::vector<WedgeElement>& elts, const RingPtr& ring);

struct KoszulData {
    Ambient amb;
    std::vector<Polynomial> f;
    int r = 0;
    std::vector<FreeModule> K;          // K_0..K_r, twists = subset degree sums
    std::vector<GradedMap> delta;       // delta[i]: K_{i+1} -> K_i  (i = 0..r-1)
    std::vector<std::vector<MVec>> Z;   // cycle generators in K_i
    std::vector<std::vector<MVec>> B;   // boundary generators in K_i
    std::vector<bool> H_zero;           // homology vanishing flags
    int grade = 0;                      // r - top nonvanishing H_i; +inf for unit ideal

    Subquotient homology(int i) const;          // H_i = Z_i/B_i
    WedgeElement cycle_as_wedge(int i, int gen_index) const;
    const GradedMap& differential(int i) const {  // delta_i : K_i -> K_{i-1}
        if (i < 1 || i > r) throw error("Koszul differential index out of range");
        return delta[static_cast<std::size_t>(i - 1)];
    }
};

KoszulData koszul_complex(const Ambient& amb, const std::vector<Polynomial>& f,
                          const GBConfig& cfg = {});

struct ProperSeqResult {
    bool proper = true;
    std::string witness;  // first violation, empty when proper
};
// f_{i+1} H_j(f_1..f_i) = 0 for all j >= 1, i = 0..r-1 (order-sensitive)
ProperSeqResult proper_sequence_check(const Ambient& amb, const std::vector<Polynomial>& f,
                                      const GBConfig& cfg = {});

enum class SlidingVariant { SD, SDC };
struct SlidingDepthResult {
    bool holds = true;
    std::vector<std::string> detail;
};
// depth(H_i) (SD) or depth(Z_i) (SDC) >= dim R - r + i + k for i <= r - grade
SlidingDepthResult sliding_depth_check(const Ambient& amb, const std::vector<Polynomial>& f,
                                       int k, SlidingVariant variant, const GBConfig& cfg = {});

}  // namespace resint
