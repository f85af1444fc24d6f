#pragma once

#include <optional>

#include "resint/koszul.hpp"

namespace resint {

// Bigraded presentation of Sym(I) over S = R[t_1..t_r]: t_i carries bidegree
// (deg f_i, 1), so the linear forms l_k = sum_i t_i b_ik are bihomogeneous.
struct SymPresentation {
    Ambient S_amb;                  // S (quotient lifted when R = P/Q)
    RingPtr S;
    int n_x = 0;                    // base variables sit at 0..n_x-1
    int r = 0;                      // t variables at n_x..n_x+r-1
    std::vector<int> d;             // deg f_i
    std::vector<Polynomial> ell;    // defining ideal L of Sym(I)
    std::vector<Polynomial> gamma;  // gamma_j = sum_i c_ij t_i (when Phi supplied)

    Polynomial t_var(int i) const { return Polynomial::variable(S, n_x + i); }
    Ideal t_ideal() const;
    Ideal L_ideal() const { return Ideal(S_amb, ell); }
};

SymPresentation symmetric_algebra(const Ambient& amb, const std::vector<Polynomial>& f,
                                  const GBConfig& cfg = {});

// attach gamma_j = sum_i Phi[i][j] t_i to an existing presentation
void attach_gamma(SymPresentation& sym, const std::vector<std::vector<Polynomial>>& Phi);

struct SymBetti {
    BettiTable betti;      // twists are (R-degree, t-degree)
    int t_regularity = 0;  // max(t-twist - homological index)
    int pd = 0;
};

// minimal bigraded Betti numbers of Sym(I) over S for a polynomial base R.
// When the generators form a proper sequence the two consequences are
// asserted: t-regularity 0 and beta^S_i = sum_j beta^R_{i-j}(Z_j).
SymBetti sym_bigraded_betti(const Ambient& amb, const std::vector<Polynomial>& f,
                            const GBConfig& cfg = {});

// bounded variant over quotient bases: nullopt when the minimal resolution
// over S does not stop within max_len steps
std::optional<SymBetti> sym_betti_bounded(const Ambient& amb, const std::vector<Polynomial>& f,
                                          int max_len, const GBConfig& cfg = {});

}  // namespace resint
